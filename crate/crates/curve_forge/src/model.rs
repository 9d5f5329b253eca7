//! Nodal (and more generally ordinary-singular) plane models of curves.
//!
//! A model is a degree-`d` form in three variables together with a list of
//! assigned points and multiplicities.  The geometric genus is
//! `(d-1)(d-2)/2 - sum m_i (m_i - 1) / 2`.  Models are built by sampling:
//! random distinct points, the kernel of the multiplicity conditions, and a
//! random member of that kernel, retried until every assigned point is an
//! ordinary point of exactly the requested multiplicity and the adjoint
//! machinery reproduces the Riemann-Roch dimension profile.
//!
//! Models without singular points carry a smoothness certificate: the
//! Jacobian ideal of the form contains every form of degree `3d - 4`,
//! which by the Nullstellensatz (through the Macaulay bound) rules out any
//! common zero of the partials over the algebraic closure.  The
//! certificate is one-sided — failure to certify merely triggers a fresh
//! sample.

use exact_core::{kernel_basis, Field, Matrix, SplitMix64};
use graded_ring::{binomial, ideal_piece, monomials, GradedQuotient, HomogeneousPoly};
use num_bigint::BigInt;
use num_integer::Integer;

use crate::adjoint::{adjoint_basis, canonical_quotient};
use crate::conditions::{
    has_multiplicity_at_least, is_ordinary_point, multiplicity_condition_rows,
};
use crate::error::ForgeError;
use crate::points::{sample_distinct_points, PlanePoint};
use crate::ForgeResult;

/// Largest plane-model degree the builder accepts.
pub const MAX_PLANE_DEGREE: usize = 12;

/// Attempt budget for the sampling loop.
const MAX_ATTEMPTS: usize = 32;

/// A plane curve model with assigned ordinary singular points.
#[derive(Debug, Clone)]
pub struct PlaneModel<F: Field> {
    field: F,
    degree: usize,
    form: HomogeneousPoly<F>,
    singular_points: Vec<(PlanePoint<F>, usize)>,
    genus: usize,
    seed: u64,
}

/// Geometric genus of a degree-`d` plane curve with ordinary points of the
/// given multiplicities (and no other singularities).
pub fn plane_genus(degree: usize, multiplicities: &[usize]) -> i64 {
    let d = degree as i64;
    let mut g = (d - 1) * (d - 2) / 2;
    for &m in multiplicities {
        let m = m as i64;
        g -= m * (m - 1) / 2;
    }
    g
}

impl<F: Field> PlaneModel<F> {
    /// Validates and assembles a model from parts: the form must be
    /// nonzero of the stated degree, each assigned point an ordinary point
    /// of exactly the stated multiplicity, the points distinct, the genus
    /// at least 3, and a model with no assigned points must pass the
    /// smoothness certificate.
    pub fn assemble(
        field: F,
        degree: usize,
        form: HomogeneousPoly<F>,
        singular_points: Vec<(PlanePoint<F>, usize)>,
        seed: u64,
    ) -> ForgeResult<Self> {
        if !(4..=MAX_PLANE_DEGREE).contains(&degree) {
            return Err(ForgeError::Schema(format!(
                "plane model degree must lie in 4..={MAX_PLANE_DEGREE}, got {degree}"
            )));
        }
        if form.is_zero() {
            return Err(ForgeError::ZeroForm);
        }
        if form.nvars() != 3 || form.degree() != degree {
            return Err(ForgeError::Schema(format!(
                "form has {} variables and degree {}, expected 3 and {degree}",
                form.nvars(),
                form.degree()
            )));
        }
        if singular_points.len() > 32 {
            return Err(ForgeError::Schema(format!(
                "too many singular points: {}",
                singular_points.len()
            )));
        }
        for i in 0..singular_points.len() {
            for j in (i + 1)..singular_points.len() {
                if singular_points[i].0 == singular_points[j].0 {
                    return Err(ForgeError::Schema(format!(
                        "singular points {i} and {j} coincide"
                    )));
                }
            }
        }
        let mults: Vec<usize> = singular_points.iter().map(|(_, m)| *m).collect();
        for &m in &mults {
            if m < 2 || m + 2 > degree {
                return Err(ForgeError::Schema(format!(
                    "multiplicity {m} out of range for degree {degree} (need 2 <= m <= d-2)"
                )));
            }
        }
        let genus = plane_genus(degree, &mults);
        if genus < 3 {
            return Err(ForgeError::GenusTooSmall(genus));
        }
        for (point, m) in &singular_points {
            if !has_multiplicity_at_least(&field, &form, point, *m) {
                return Err(ForgeError::Schema(format!(
                    "form does not vanish to order {m} at an assigned point"
                )));
            }
            if !is_ordinary_point(&field, &form, point, *m) {
                return Err(ForgeError::Schema(format!(
                    "assigned point is not an ordinary multiplicity-{m} point"
                )));
            }
        }
        if singular_points.is_empty() && !certify_smooth(&field, &form) {
            return Err(ForgeError::Schema(
                "smoothness certificate failed for a model with no assigned points".into(),
            ));
        }
        Ok(PlaneModel {
            field,
            degree,
            form,
            singular_points,
            genus: genus as usize,
            seed,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn form(&self) -> &HomogeneousPoly<F> {
        &self.form
    }

    pub fn singular_points(&self) -> &[(PlanePoint<F>, usize)] {
        &self.singular_points
    }

    /// Geometric genus of the normalization.
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Seed recorded at construction (0 for ingested models).
    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Certifies smoothness of the plane curve cut by `f`: returns true when
/// the ideal generated by `f` and its three partials contains the full
/// space of forms of degree `3d - 4` (the Macaulay bound for three forms
/// of degree `d - 1` and one of degree `d`), which forces the singular
/// locus to be empty.  A `false` answer proves nothing.
pub fn certify_smooth<F: Field>(field: &F, f: &HomogeneousPoly<F>) -> bool {
    let d = f.degree();
    let bound = 3 * d - 4;
    let mut gens = vec![f.clone()];
    for var in 0..3 {
        gens.push(f.derivative(var));
    }
    let piece = match ideal_piece(field, 3, &gens, bound) {
        Ok(p) => p,
        Err(_) => return false,
    };
    piece.dim() == monomials(3, bound).len()
}

/// Multiplies through by a common denominator so that every coefficient
/// parses as an integer; a no-op over finite fields, where coefficient
/// strings never carry a slash.
pub(crate) fn clear_denominators<F: Field>(field: &F, poly: &HomogeneousPoly<F>) -> HomogeneousPoly<F> {
    let mut lcm = BigInt::from(1);
    for (_, c) in poly.terms() {
        let s = field.elem_string(c);
        if let Some((_, den)) = s.split_once('/') {
            if let Ok(d) = den.parse::<BigInt>() {
                lcm = lcm.lcm(&d);
            }
        }
    }
    if lcm == BigInt::from(1) {
        return poly.clone();
    }
    let scale = field
        .parse_elem(&lcm.to_string())
        .expect("an integer literal parses in every field");
    poly.scale(&scale)
}

/// Builds a plane model of the given degree with ordinary points of the
/// given multiplicities at random distinct points, over the given field,
/// deterministically from `seed`.  Retries sampling until every gate
/// passes: exact ordinary multiplicities, smoothness certificate for
/// no-point models, adjoint dimension equal to the genus, and the
/// Riemann-Roch dimension profile of the canonical quotient through
/// degree 4.
pub fn build_plane_model<F: Field>(
    field: &F,
    degree: usize,
    multiplicities: &[usize],
    seed: u64,
) -> ForgeResult<PlaneModel<F>> {
    if !(4..=MAX_PLANE_DEGREE).contains(&degree) {
        return Err(ForgeError::Schema(format!(
            "plane model degree must lie in 4..={MAX_PLANE_DEGREE}, got {degree}"
        )));
    }
    for &m in multiplicities {
        if m < 2 || m + 2 > degree {
            return Err(ForgeError::Schema(format!(
                "multiplicity {m} out of range for degree {degree} (need 2 <= m <= d-2)"
            )));
        }
    }
    let genus = plane_genus(degree, multiplicities);
    if genus < 3 {
        return Err(ForgeError::GenusTooSmall(genus));
    }
    let space_dim = binomial(degree + 2, 2);
    let conditions: usize = multiplicities.iter().map(|&m| m * (m + 1) / 2).sum();
    if conditions >= space_dim {
        return Err(ForgeError::EmptyLinearSystem { degree });
    }

    let mut rng = SplitMix64::new(seed);
    let mut last_reason = String::from("no attempt made");
    for _ in 0..MAX_ATTEMPTS {
        match attempt_model(field, degree, multiplicities, genus as usize, seed, &mut rng) {
            Ok(model) => return Ok(model),
            Err(reason) => last_reason = reason,
        }
    }
    Err(ForgeError::ConstructionFailed {
        attempts: MAX_ATTEMPTS,
        reason: last_reason,
    })
}

/// One sampling attempt; an `Err` carries the human-readable gate that
/// rejected it.
fn attempt_model<F: Field>(
    field: &F,
    degree: usize,
    multiplicities: &[usize],
    genus: usize,
    seed: u64,
    rng: &mut SplitMix64,
) -> Result<PlaneModel<F>, String> {
    let points = sample_distinct_points(field, multiplicities.len(), rng)
        .map_err(|e| format!("point sampling: {e}"))?;
    let mut rows = Vec::new();
    for (point, &m) in points.iter().zip(multiplicities) {
        rows.extend(multiplicity_condition_rows(field, degree, point, m));
    }
    let space_dim = binomial(degree + 2, 2);
    let system = kernel_basis(&Matrix::from_rows(field.clone(), space_dim, rows));
    if system.dim() == 0 {
        return Err("multiplicity conditions left no form".into());
    }
    let mut coeffs = vec![field.zero(); space_dim];
    for basis_vec in system.basis() {
        let c = field.sample(rng);
        for (slot, entry) in coeffs.iter_mut().zip(basis_vec) {
            let t = field.mul(&c, entry);
            *slot = field.add(slot, &t);
        }
    }
    let form = HomogeneousPoly::from_dense(field.clone(), 3, degree, &coeffs);
    if form.is_zero() {
        return Err("sampled the zero form".into());
    }
    let form = clear_denominators(field, &form);
    let singular_points: Vec<(PlanePoint<F>, usize)> = points
        .into_iter()
        .zip(multiplicities.iter().copied())
        .collect();
    let model = PlaneModel::assemble(field.clone(), degree, form, singular_points, seed)
        .map_err(|e| format!("validation: {e}"))?;

    // Adjoint and Riemann-Roch gates: the canonical quotient must look
    // like the canonical ring of a genus-g curve through degree 4.
    let adjoints = adjoint_basis(&model).map_err(|e| format!("adjoints: {e}"))?;
    if adjoints.len() != genus {
        return Err(format!(
            "adjoint system has dimension {}, genus is {genus}",
            adjoints.len()
        ));
    }
    canonical_quotient(&model, 4, "gate")
        .map_err(|e| format!("canonical quotient: {e}"))?;
    Ok(model)
}

/// Convenience used by gates and tests: the expected canonical-ring
/// dimension in degree `k` for genus `g` (1, g, then (2k-1)(g-1)).
pub fn canonical_dimension(genus: usize, k: usize) -> usize {
    match k {
        0 => 1,
        1 => genus,
        _ => (2 * k - 1) * (genus - 1),
    }
}

/// Checks a graded quotient against the canonical-curve profile.
pub(crate) fn riemann_roch_gate<F: Field>(
    quotient: &GradedQuotient<F>,
    genus: usize,
) -> Result<(), String> {
    for k in 0..=quotient.qmax() {
        let got = quotient.dim_r(k);
        let want = canonical_dimension(genus, k);
        if got != want {
            return Err(format!(
                "degree-{k} piece has dimension {got}, Riemann-Roch expects {want}"
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::{PrimeField, Rationals};
    use graded_ring::parse_poly;

    #[test]
    fn genus_formula_matches_known_models() {
        assert_eq!(plane_genus(4, &[]), 3);
        assert_eq!(plane_genus(5, &[2]), 5);
        assert_eq!(plane_genus(5, &[]), 6);
        assert_eq!(plane_genus(6, &[2, 2, 2, 2]), 6);
        assert_eq!(plane_genus(7, &[2; 8]), 7);
        assert_eq!(plane_genus(7, &[2; 7]), 8);
        assert_eq!(plane_genus(8, &[2; 12]), 9);
        assert_eq!(plane_genus(4, &[2]), 2);
    }

    #[test]
    fn smooth_quartic_certificate() {
        let f = PrimeField::new(101).unwrap();
        // The Fermat quartic is smooth away from characteristic 2.
        let fermat = parse_poly(&f, 3, "x^4 + y^4 + z^4").unwrap();
        assert!(certify_smooth(&f, &fermat));
        // A nodal quartic fails the certificate.
        let nodal = parse_poly(&f, 3, "x^2*z^2 - y^2*z^2 + x^4 + y^4").unwrap();
        assert!(!certify_smooth(&f, &nodal));
    }

    #[test]
    fn builder_rejects_small_genus() {
        let f = PrimeField::new(101).unwrap();
        match build_plane_model(&f, 4, &[2], 1) {
            Err(ForgeError::GenusTooSmall(2)) => {}
            other => panic!("expected GenusTooSmall(2), got {other:?}"),
        }
    }

    #[test]
    fn trigonal_quintic_builds_deterministically() {
        let f = PrimeField::new(101).unwrap();
        let model = build_plane_model(&f, 5, &[2], 1).unwrap();
        assert_eq!(model.genus(), 5);
        assert_eq!(model.degree(), 5);
        assert_eq!(model.singular_points().len(), 1);
        let again = build_plane_model(&f, 5, &[2], 1).unwrap();
        assert_eq!(model.form(), again.form());
        assert_eq!(model.singular_points()[0].0, again.singular_points()[0].0);
    }

    #[test]
    fn smooth_quintic_over_the_rationals() {
        let q = Rationals::new();
        let model = build_plane_model(&q, 5, &[], 7).unwrap();
        assert_eq!(model.genus(), 6);
        assert!(model.singular_points().is_empty());
        // Coefficients come out denominator-free.
        for (_, c) in model.form().terms() {
            assert!(!q.elem_string(c).contains('/'));
        }
    }

    #[test]
    fn denominator_clearing_is_generic() {
        let q = Rationals::new();
        let half = q.parse_elem("1/2").unwrap();
        let third = q.parse_elem("-1/3").unwrap();
        let mut poly = parse_poly(&q, 3, "x^2 + y*z").unwrap();
        poly = poly.scale(&half);
        let other = parse_poly(&q, 3, "z^2").unwrap().scale(&third);
        let mixed = poly.add(&other).unwrap();
        let cleared = clear_denominators(&q, &mixed);
        for (_, c) in cleared.terms() {
            assert!(!q.elem_string(c).contains('/'));
        }
        // Clearing preserves the line through the form.
        let six = q.from_int(6);
        assert_eq!(cleared, mixed.scale(&six));
    }
}
