//! Cross-field integration checks for the public linear algebra API.

use exact_core::{
    kernel_basis, mat_rank, reduce_mod_subspace, subspace_intersect, subspace_sum, with_field,
    Field, FieldSpec, Matrix, SplitMix64, Subspace,
};

/// Rank of a fixed integer matrix computed in each supported field via the
/// dispatch macro.  The determinant is -3, so the rank drops to 2 exactly
/// in characteristic 3 and stays 3 everywhere else.
#[test]
fn rank_across_fields_matches_determinant_factorization() {
    let entries: [[i64; 3]; 3] = [[1, 2, 3], [4, 5, 6], [7, 8, 10]];
    let det: i64 = -3;
    let specs: Vec<FieldSpec> = vec![
        "q".parse().unwrap(),
        "gf:2".parse().unwrap(),
        "gf:3".parse().unwrap(),
        "gf:5".parse().unwrap(),
        "gf:101".parse().unwrap(),
        "gf2e:4".parse().unwrap(),
        "gf2e:8".parse().unwrap(),
    ];
    for spec in specs {
        let rank = with_field!(spec, |f| {
            let rows: Vec<Vec<_>> = entries
                .iter()
                .map(|row| row.iter().map(|&n| f.from_int(n)).collect())
                .collect();
            mat_rank(&Matrix::from_rows(f, 3, rows))
        });
        let drops = match spec.characteristic() {
            0 => false,
            p => det.unsigned_abs() % p == 0,
        };
        assert_eq!(rank, if drops { 2 } else { 3 }, "field {spec}");
    }
}

#[test]
fn kernel_basis_spans_exact_null_space() {
    let spec: FieldSpec = "gf:1009".parse().unwrap();
    with_field!(spec, |f| {
        let mut rng = SplitMix64::new(321);
        for _ in 0..10 {
            let nrows = 2 + rng.next_below(6) as usize;
            let ncols = 2 + rng.next_below(8) as usize;
            let data: Vec<_> = (0..nrows * ncols).map(|_| f.sample(&mut rng)).collect();
            let m = Matrix::from_dense(f.clone(), nrows, ncols, data);
            let ker = kernel_basis(&m);
            assert_eq!(ker.dim(), ncols - mat_rank(&m), "rank-nullity");
            for v in ker.basis() {
                for i in 0..nrows {
                    let mut acc = f.zero();
                    for j in 0..ncols {
                        acc = f.add(&acc, &f.mul(&m.get(i, j), &v[j]));
                    }
                    assert!(f.is_zero(&acc), "kernel vector annihilated");
                }
            }
        }
    });
}

#[test]
fn subspace_ops_through_free_functions() {
    let spec: FieldSpec = "gf:101".parse().unwrap();
    with_field!(spec, |f| {
        let a = Subspace::from_rows(
            f.clone(),
            4,
            vec![
                vec![f.from_int(1), f.from_int(0), f.from_int(1), f.from_int(0)],
                vec![f.from_int(0), f.from_int(1), f.from_int(0), f.from_int(1)],
            ],
        );
        let b = Subspace::from_rows(
            f.clone(),
            4,
            vec![vec![f.from_int(1), f.from_int(1), f.from_int(1), f.from_int(1)]],
        );
        let s = subspace_sum(&a, &b).unwrap();
        let i = subspace_intersect(&a, &b).unwrap();
        // b is inside a, so the sum is a and the intersection is b.
        assert_eq!(s, a);
        assert_eq!(i, b);
        let r = reduce_mod_subspace(
            &[f.from_int(2), f.from_int(3), f.from_int(2), f.from_int(3)],
            &a,
        )
        .unwrap();
        assert!(r.iter().all(|x| f.is_zero(x)));
        assert!(reduce_mod_subspace(&vec![f.zero(); 3], &a).is_err());
    });
}

/// The same integer matrix must have the same rank over Q computed
/// multimodularly and over a large prime field directly.
#[test]
fn rational_and_prime_ranks_agree_on_integer_matrices() {
    let q: FieldSpec = "q".parse().unwrap();
    let p: FieldSpec = "gf:2147483647".parse().unwrap();
    let mut rng = SplitMix64::new(7);
    for _ in 0..6 {
        let nrows = 3 + rng.next_below(6) as usize;
        let ncols = 3 + rng.next_below(6) as usize;
        let ints: Vec<i64> = (0..nrows * ncols)
            .map(|_| rng.next_in_range(-30, 30))
            .collect();
        let rq = with_field!(q, |f| {
            let data: Vec<_> = ints.iter().map(|&n| f.from_int(n)).collect();
            Matrix::from_dense(f, nrows, ncols, data).into_rank()
        });
        let rp = with_field!(p, |f| {
            let data: Vec<_> = ints.iter().map(|&n| f.from_int(n)).collect();
            Matrix::from_dense(f, nrows, ncols, data).into_rank()
        });
        assert_eq!(rq, rp);
    }
}
