//! The averaging retraction of the exterior differential.
//!
//! In weight zero the differential embeds `Λ^p V` into `Λ^{p-1} V ⊗ V` by
//! `d(v_{s_0} ∧ ... ∧ v_{s_{p-1}}) = Σ_k (-1)^k (... v̂_{s_k} ...) ⊗ v_{s_k}`,
//! and wedging back recovers the source up to a factor of `p`:
//!
//! ```text
//! r(τ ⊗ ω) = (1/p) ω ∧ τ    satisfies    r ∘ d = id on Λ^p V.
//! ```
//!
//! The identity needs `1/p`, so it exists exactly when the field
//! characteristic does not divide `p` — the reason weight-zero syzygy
//! statements can degenerate in small characteristic while holding over the
//! rationals.

use exact_core::{Field, Matrix};

use crate::error::KoszulError;
use crate::wedge::{wedge_count, wedge_rank, wedge_tuples};

/// Verifies `r ∘ d = id` on `Λ^p V` for an `n`-dimensional `V` by exact
/// matrix multiplication.  Returns [`KoszulError::CharDividesP`] when the
/// field characteristic divides `p` (the retraction does not exist there);
/// otherwise returns whether the composite equals the identity, which a
/// correct implementation always reports as `true`.
pub fn retraction_identity_check<F: Field>(
    field: &F,
    n: usize,
    p: usize,
) -> Result<bool, KoszulError> {
    assert!(p >= 1, "the retraction divides by p");
    assert!(p <= n, "the exterior power must be nonzero");
    let ch = field.characteristic();
    if ch != 0 && (p as u64) % ch == 0 {
        return Err(KoszulError::CharDividesP { p, ch });
    }
    let dim_p = wedge_count(n, p);
    let dim_t = wedge_count(n, p - 1);
    let one = field.one();
    let minus_one = field.neg(&one);

    // d: Λ^p -> Λ^{p-1} ⊗ V, rows indexed by wedge_rank(T) * n + var.
    let mut d_rows: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); dim_t * n];
    for (s_rank, s) in wedge_tuples(n, p).iter().enumerate() {
        for k in 0..p {
            let mut t = s.clone();
            t.remove(k);
            let row = wedge_rank(&t) * n + s[k] as usize;
            let sign = if k % 2 == 0 { &one } else { &minus_one };
            d_rows[row].push((s_rank as u32, sign.clone()));
        }
    }
    let d = Matrix::from_sparse(field.clone(), dim_t * n, dim_p, d_rows);

    // r: Λ^{p-1} ⊗ V -> Λ^p, r(τ ⊗ v_i) = (1/p) v_i ∧ τ.  Wedging v_i into
    // the sorted tuple τ costs one transposition per entry below i.
    let inv_p = field.inv(&field.from_int(p as i64)).expect("char does not divide p");
    let neg_inv_p = field.neg(&inv_p);
    let mut r_rows: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); dim_p];
    for (t_rank, t) in wedge_tuples(n, p - 1).iter().enumerate() {
        for i in 0..n {
            if t.contains(&(i as u8)) {
                continue; // v_i ∧ τ = 0
            }
            let col = (t_rank * n + i) as u32;
            let below = t.iter().filter(|&&e| (e as usize) < i).count();
            let mut s: Vec<u8> = t.clone();
            s.push(i as u8);
            s.sort_unstable();
            let val = if below % 2 == 0 { &inv_p } else { &neg_inv_p };
            r_rows[wedge_rank(&s)].push((col, val.clone()));
        }
    }
    let r = Matrix::from_sparse(field.clone(), dim_p, dim_t * n, r_rows);

    let product = r.mul(&d).expect("composable by construction");
    let entries = product.to_dense_entries();
    for i in 0..dim_p {
        for j in 0..dim_p {
            let expected = if i == j { field.one() } else { field.zero() };
            if entries[i * dim_p + j] != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{BinaryField, Gf2, PrimeField, Rationals};

    #[test]
    fn holds_over_the_rationals_for_all_small_shapes() {
        let f = Rationals::new();
        for n in 1..=6 {
            for p in 1..=n {
                assert!(retraction_identity_check(&f, n, p).unwrap(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn holds_in_large_characteristic() {
        let f = PrimeField::new(1009).unwrap();
        for n in 1..=6 {
            for p in 1..=n {
                assert!(retraction_identity_check(&f, n, p).unwrap());
            }
        }
    }

    #[test]
    fn characteristic_dividing_p_is_an_error_and_other_p_survive() {
        let f = PrimeField::new(3).unwrap();
        for n in 1..=6usize {
            for p in 1..=n {
                let res = retraction_identity_check(&f, n, p);
                if p % 3 == 0 {
                    assert!(matches!(res, Err(KoszulError::CharDividesP { ch: 3, .. })));
                } else {
                    assert!(res.unwrap());
                }
            }
        }
    }

    #[test]
    fn characteristic_two_rejects_even_p_in_both_presentations() {
        let g = Gf2::new();
        let b = BinaryField::with_default_modulus(4).unwrap();
        for p in 1..=5usize {
            for res in [
                retraction_identity_check(&g, 5, p),
                retraction_identity_check(&b, 5, p),
            ] {
                if p % 2 == 0 {
                    assert!(matches!(res, Err(KoszulError::CharDividesP { ch: 2, .. })));
                } else {
                    assert!(res.unwrap());
                }
            }
        }
    }
}
