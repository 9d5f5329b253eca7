//! Adjoint linear systems and canonical rings of plane models.
//!
//! For a degree-`d` model with ordinary points of multiplicities `m_i`,
//! the adjoint system is the space of degree-`(d-3)` forms vanishing to
//! order `m_i - 1` at each assigned point.  Restricted to the curve it
//! cuts the canonical series of the normalization, so its dimension must
//! equal the genus.
//!
//! The canonical ring is presented as a quotient of the polynomial ring on
//! `g` variables: degree-`k` relations are the kernel of the evaluation
//! map sending a `k`-fold product of the adjoint basis to its residue
//! modulo the model form.  Kernels in degrees 2, 3 and 4 generate the
//! ideal of a canonically embedded curve, and the resulting quotient is
//! accepted only when its dimension profile matches Riemann-Roch
//! (`1, g, 3(g-1), 5(g-1), ...`), which certifies degree by degree that
//! the generated ideal is the full one and that products of canonical
//! forms span each piece.

use exact_core::{kernel_basis, Field, Matrix};
use graded_ring::{
    ideal_piece, monomial_rank, monomials, quotient_sequence, GradedQuotient, HomogeneousPoly,
    QuotientKind,
};

use crate::conditions::multiplicity_condition_rows;
use crate::error::ForgeError;
use crate::model::{clear_denominators, riemann_roch_gate, PlaneModel};
use crate::ForgeResult;

/// Basis of the adjoint system of the model: degree-`(d-3)` forms with
/// multiplicity at least `m - 1` at every assigned multiplicity-`m` point.
/// Coefficient vectors are echelon-normalized, denominators cleared.
pub fn adjoint_basis<F: Field>(model: &PlaneModel<F>) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    let field = model.field();
    let deg = model.degree() - 3;
    let ambient = monomials(3, deg).len();
    let mut rows = Vec::new();
    for (point, m) in model.singular_points() {
        rows.extend(multiplicity_condition_rows(field, deg, point, m - 1));
    }
    let system = kernel_basis(&Matrix::from_rows(field.clone(), ambient, rows));
    if system.dim() == 0 {
        return Err(ForgeError::EmptyLinearSystem { degree: deg });
    }
    Ok(system
        .basis()
        .iter()
        .map(|v| {
            let poly = HomogeneousPoly::from_dense(field.clone(), 3, deg, v);
            clear_denominators(field, &poly)
        })
        .collect())
}

/// The canonical ring of the model as a graded quotient on `g` variables,
/// carried through degree `qmax`.
///
/// Relations are computed exactly in degrees 2 through 4 as evaluation
/// kernels and taken as generators; the quotient they present is gated on
/// the Riemann-Roch profile, which fails (and rejects the model) unless
/// the generated ideal piece equals the full relation space in every
/// degree up to `qmax`.
pub fn canonical_quotient<F: Field>(
    model: &PlaneModel<F>,
    qmax: usize,
    label: &str,
) -> ForgeResult<GradedQuotient<F>> {
    let field = model.field();
    let g = model.genus();
    let adjoints = adjoint_basis(model)?;
    if adjoints.len() != g {
        return Err(ForgeError::AdjointDimensionMismatch {
            expected: g,
            got: adjoints.len(),
        });
    }

    let mut gens: Vec<HomogeneousPoly<F>> = Vec::new();
    let mut products: Vec<HomogeneousPoly<F>> = vec![HomogeneousPoly::monomial(
        field.clone(),
        3,
        &[0, 0, 0],
        field.one(),
    )];
    for k in 1..=4usize {
        products = next_products(g, k, &adjoints, &products)?;
        if k < 2 {
            continue;
        }
        let piece_deg = k * (model.degree() - 3);
        let modulus = ideal_piece(field, 3, std::slice::from_ref(model.form()), piece_deg)?;
        let coords: Vec<Vec<F::Elem>> = products
            .iter()
            .map(|p| modulus.coset_coordinates(&p.to_dense()))
            .collect();
        let eval = Matrix::from_rows(
            field.clone(),
            monomials(3, piece_deg).len() - modulus.dim(),
            coords,
        )
        .transpose();
        for v in kernel_basis(&eval).basis() {
            let poly = HomogeneousPoly::from_dense(field.clone(), g, k, v);
            gens.push(clear_denominators(field, &poly));
        }
    }

    let quotient = quotient_sequence(field, g, &gens, qmax, label)?
        .with_meta(QuotientKind::CanonicalCurve, g);
    riemann_roch_gate(&quotient, g).map_err(|reason| ForgeError::ConstructionFailed {
        attempts: 1,
        reason,
    })?;
    Ok(quotient)
}

/// Degree-`k` products of the adjoint basis, one per monomial of
/// `monomials(g, k)` in rank order, built from the degree-`(k-1)` list.
fn next_products<F: Field>(
    g: usize,
    k: usize,
    adjoints: &[HomogeneousPoly<F>],
    previous: &[HomogeneousPoly<F>],
) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    let mut out = Vec::new();
    for expo in monomials(g, k) {
        let first = expo
            .iter()
            .position(|&e| e > 0)
            .expect("positive-degree monomial has a variable");
        let mut prev = expo.clone();
        prev[first] -= 1;
        let base = &previous[monomial_rank(&prev)];
        out.push(base.mul(&adjoints[first]).map_err(ForgeError::from)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_plane_model;
    use exact_core::PrimeField;

    #[test]
    fn smooth_quartic_adjoints_are_the_coordinate_lines() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 4, &[], 3).unwrap();
        let adjoints = adjoint_basis(&model).unwrap();
        assert_eq!(adjoints.len(), 3);
        for (i, a) in adjoints.iter().enumerate() {
            assert_eq!(a.degree(), 1);
            let mut expo = [0u8; 3];
            expo[i] = 1;
            assert_eq!(a.coeff(&expo), f.one());
        }
    }

    #[test]
    fn quartic_canonical_ring_is_the_hypersurface_ring() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 4, &[], 3).unwrap();
        let q = canonical_quotient(&model, 4, "g3").unwrap();
        assert_eq!(q.piece_dims(), &[1, 3, 6, 10, 14]);
        assert_eq!(q.genus(), 3);
        // The only relation through degree 4 is the quartic itself.
        assert_eq!(q.ideal_piece_at(2).dim(), 0);
        assert_eq!(q.ideal_piece_at(3).dim(), 0);
        assert_eq!(q.ideal_piece_at(4).dim(), 1);
    }

    #[test]
    fn trigonal_quintic_canonical_ring_matches_riemann_roch() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        let q = canonical_quotient(&model, 4, "g5_trigonal").unwrap();
        assert_eq!(q.piece_dims(), &[1, 5, 12, 20, 28]);
        // Genus 5 trigonal: three quadric relations (rank-3 quadrics), not
        // a complete intersection.
        assert_eq!(q.ideal_piece_at(2).dim(), 3);
    }

    #[test]
    fn adjoint_conditions_vanish_at_the_nodes() {
        let f = PrimeField::new(1009).unwrap();
        let model = build_plane_model(&f, 6, &[2, 2, 2, 2], 1).unwrap();
        let adjoints = adjoint_basis(&model).unwrap();
        assert_eq!(adjoints.len(), 6);
        for a in &adjoints {
            for (point, _) in model.singular_points() {
                let vals: Vec<_> = point.coords().to_vec();
                assert!(f.is_zero(&a.evaluate(&vals)));
            }
        }
    }
}
