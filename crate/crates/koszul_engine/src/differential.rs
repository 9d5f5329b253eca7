//! Assembly of the exact-row complex differentials.
//!
//! With `V = R_1` the degree-one piece of a graded quotient `R`, the
//! differential in homological position `(p, q)` is the map
//!
//! ```text
//! d : Λ^p V ⊗ R_q  ->  Λ^{p-1} V ⊗ R_{q+1}
//! d(v_{s_0} ∧ ... ∧ v_{s_{p-1}} ⊗ P) = Σ_k (-1)^k  v_{s_0} ∧ ... v̂_{s_k} ... ⊗ x_{s_k} P,
//! ```
//!
//! where the hat removes the `k`-th factor (0-based).  Basis vectors of
//! `Λ^p V ⊗ R_q` are indexed by `wedge_rank(S) * dim R_q + j`, with `j`
//! running over the coset basis of `R_q`; rows of the matrix are indexed the
//! same way one position down.  The syzygy space in position `(p, q)` is the
//! homology at the middle of two consecutive such maps.

use exact_core::{Field, Matrix};
use graded_ring::GradedQuotient;

use crate::error::KoszulError;
use crate::wedge::{wedge_count, wedge_rank, wedge_tuples};

/// The differential `Λ^p V ⊗ R_q -> Λ^{p-1} V ⊗ R_{q+1}` as a sparse matrix
/// over the quotient's field.
///
/// Degenerate positions are well-defined: `p = 0` yields a matrix with zero
/// rows (the exterior power below is zero), and `p > nvars` one with zero
/// columns.  Requires `q + 1 <= qmax` so the target piece is available.
pub fn differential_matrix<F: Field>(
    quotient: &GradedQuotient<F>,
    p: usize,
    q: usize,
) -> Result<Matrix<F>, KoszulError> {
    if q + 1 > quotient.qmax() {
        return Err(KoszulError::QmaxTooSmall {
            need: q + 1,
            have: quotient.qmax(),
        });
    }
    let field = quotient.field().clone();
    let n = quotient.nvars();
    let r_in = quotient.dim_r(q);
    let r_out = quotient.dim_r(q + 1);
    let ncols = wedge_count(n, p) * r_in;
    if p == 0 {
        return Ok(Matrix::from_sparse(field, 0, ncols, Vec::new()));
    }
    let nrows = wedge_count(n, p - 1) * r_out;
    let mut rows: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); nrows];
    let one = field.one();
    let minus_one = field.neg(&one);
    let mult = quotient.mult_map(q);
    for (s_rank, s) in wedge_tuples(n, p).iter().enumerate() {
        for j in 0..r_in {
            let col = (s_rank * r_in + j) as u32;
            // Walking k from high to low visits the deleted-index tuples in
            // increasing colexicographic rank, but rows within a column need
            // no ordering; only each *row's* column list must stay sorted,
            // which holds because columns are visited in increasing order.
            for k in 0..p {
                let var = s[k] as usize;
                let mut t = s.clone();
                t.remove(k);
                let t_base = wedge_rank(&t) * r_out;
                let sign = if k % 2 == 0 { &one } else { &minus_one };
                for (row_in_r, v) in mult.col(var, j) {
                    let row = t_base + *row_in_r as usize;
                    rows[row].push((col, field.mul(sign, v)));
                }
            }
        }
    }
    Ok(Matrix::from_sparse(field, nrows, ncols, rows))
}

/// Checks `d ∘ d = 0` at position `(p, q)`: the composite
/// `Λ^p ⊗ R_q -> Λ^{p-2} ⊗ R_{q+2}` must vanish.  Requires `q + 2 <= qmax`
/// and `p >= 2` for both factors to exist.
pub fn differential_squares_to_zero<F: Field>(
    quotient: &GradedQuotient<F>,
    p: usize,
    q: usize,
) -> Result<bool, KoszulError> {
    assert!(p >= 2, "the composite needs two steps");
    let inner = differential_matrix(quotient, p, q)?;
    let outer = differential_matrix(quotient, p - 1, q + 1)?;
    let product = outer.mul(&inner).expect("composable by construction");
    Ok(product.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{PrimeField, Rationals};
    use graded_ring::{parse_poly, quotient_sequence};

    fn g4_quotient(p: u32) -> GradedQuotient<PrimeField> {
        let f = PrimeField::new(p).unwrap();
        let quadric = parse_poly(&f, 4, "x0*x3 - x1*x2").unwrap();
        let cubic = parse_poly(&f, 4, "x1^3 + x2^3 + x0^2*x1 + x3^2*x2").unwrap();
        quotient_sequence(&f, 4, &[quadric, cubic], 4, "g4_ci").unwrap()
    }

    #[test]
    fn differential_shapes_follow_the_index_scheme() {
        let quot = g4_quotient(101);
        // p = 2, q = 1 on a 4-variable quotient with dims [1, 4, 9, 15, 21]:
        // C(4,2)*4 = 24 columns, C(4,1)*9 = 36 rows.
        let d = differential_matrix(&quot, 2, 1).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (36, 24));
        // p = 0 has zero rows; p = 5 > nvars has zero columns.
        let d0 = differential_matrix(&quot, 0, 1).unwrap();
        assert_eq!((d0.nrows(), d0.ncols()), (0, 4));
        let d5 = differential_matrix(&quot, 5, 1).unwrap();
        assert_eq!(d5.ncols(), 0);
    }

    #[test]
    fn composites_vanish_on_a_complete_intersection() {
        let quot = g4_quotient(101);
        for p in 2..=4 {
            for q in 0..=2 {
                assert!(
                    differential_squares_to_zero(&quot, p, q).unwrap(),
                    "d∘d != 0 at p={p}, q={q}"
                );
            }
        }
    }

    #[test]
    fn composites_vanish_over_the_rationals_and_char_two() {
        let f2 = exact_core::Gf2::new();
        let g = parse_poly(&f2, 3, "x0*x1 + x2^2").unwrap();
        let quot = quotient_sequence(&f2, 3, &[g], 3, "conic").unwrap();
        for p in 2..=3 {
            assert!(differential_squares_to_zero(&quot, p, 1).unwrap());
        }

        let qq = Rationals::new();
        let g = parse_poly(&qq, 3, "x0^2 + x1^2 + x2^2").unwrap();
        let quot = quotient_sequence(&qq, 3, &[g], 3, "conic_q").unwrap();
        for p in 2..=3 {
            assert!(differential_squares_to_zero(&quot, p, 1).unwrap());
        }
    }

    #[test]
    fn truncation_errors_are_reported() {
        let quot = g4_quotient(101);
        let err = differential_matrix(&quot, 1, 4).unwrap_err();
        assert!(matches!(
            err,
            KoszulError::QmaxTooSmall { need: 5, have: 4 }
        ));
    }

    /// On the free ring in three variables the differential out of the top
    /// exterior power in degree 0 is injective with known rank.
    #[test]
    fn free_ring_differential_ranks() {
        let f = PrimeField::new(7).unwrap();
        let quot = quotient_sequence(&f, 3, &[], 2, "free").unwrap();
        // d_{1,0}: V ⊗ R_0 -> R_1 is the identity-shaped inclusion, rank 3.
        let d = differential_matrix(&quot, 1, 0).unwrap();
        assert_eq!(d.rank(), 3);
        // d_{3,0}: Λ^3 -> Λ^2 ⊗ R_1 is injective: rank 1.
        let d = differential_matrix(&quot, 3, 0).unwrap();
        assert_eq!((d.nrows(), d.ncols()), (9, 1));
        assert_eq!(d.rank(), 1);
    }
}
