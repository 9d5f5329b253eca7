//! Complete-intersection ideals and hyperplane sections.
//!
//! Small canonical curves and the K3-type surfaces above them are complete
//! intersections: a quadric and a cubic in four or five variables, or
//! three quadrics in five or six.  Generators are sampled with random
//! coefficients; degeneracy (a drop in the quotient's dimension profile)
//! is caught by the caller's Riemann-Roch gate and retried.
//!
//! A hyperplane section substitutes one variable by a linear form in the
//! others and renumbers, realizing the quotient by a linear form as a ring
//! on one fewer variable — the algebraic form of slicing a surface by a
//! hyperplane to get the canonical curve.

use exact_core::{Field, SplitMix64};
use graded_ring::{monomials, HomogeneousPoly};

use crate::error::ForgeError;
use crate::ForgeResult;

/// A random nonzero form of the given degree.
pub fn random_form<F: Field>(
    field: &F,
    nvars: usize,
    degree: usize,
    rng: &mut SplitMix64,
) -> ForgeResult<HomogeneousPoly<F>> {
    for _ in 0..64 {
        let coeffs: Vec<F::Elem> = monomials(nvars, degree)
            .iter()
            .map(|_| field.sample(rng))
            .collect();
        let poly = HomogeneousPoly::from_dense(field.clone(), nvars, degree, &coeffs);
        if !poly.is_zero() {
            return Ok(poly);
        }
    }
    Err(ForgeError::ZeroForm)
}

/// Random complete-intersection generators of the given degrees.
pub fn ci_ideal<F: Field>(
    field: &F,
    nvars: usize,
    degrees: &[usize],
    rng: &mut SplitMix64,
) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    degrees
        .iter()
        .map(|&d| {
            if d < 2 {
                return Err(ForgeError::Schema(format!(
                    "complete-intersection generator degree must be at least 2, got {d}"
                )));
            }
            random_form(field, nvars, d, rng)
        })
        .collect()
}

/// Random generators for a polarized K3-type complete intersection of the
/// given section genus: a quartic in four variables, a quadric and cubic
/// in five, or three quadrics in six.  Degeneracy is gated downstream by
/// the Hilbert profile `2 + q^2 (g - 1)`.
pub fn ci_k3_ideal<F: Field>(
    field: &F,
    genus: usize,
    rng: &mut SplitMix64,
) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    let (nvars, degrees): (usize, &[usize]) = match genus {
        3 => (4, &[4]),
        4 => (5, &[2, 3]),
        5 => (6, &[2, 2, 2]),
        other => {
            return Err(ForgeError::Schema(format!(
                "K3 complete intersections cover genus 3..=5, got {other}"
            )))
        }
    };
    ci_ideal(field, nvars, degrees, rng)
}

/// A random linear form with every coefficient nonzero (so any variable
/// can serve as the pivot and the section stays maximally generic).
pub fn random_hyperplane<F: Field>(
    field: &F,
    nvars: usize,
    rng: &mut SplitMix64,
) -> HomogeneousPoly<F> {
    let coeffs: Vec<F::Elem> = (0..nvars).map(|_| field.sample_nonzero(rng)).collect();
    HomogeneousPoly::from_dense(field.clone(), nvars, 1, &coeffs)
}

/// Substitutes the hyperplane `ell = 0` into each generator: the pivot
/// variable (first with nonzero coefficient) is replaced by the solved
/// linear form in the remaining variables, which are renumbered down.
/// The result presents the quotient by `ell` on `nvars - 1` variables.
pub fn hyperplane_section<F: Field>(
    field: &F,
    gens: &[HomogeneousPoly<F>],
    ell: &HomogeneousPoly<F>,
) -> ForgeResult<Vec<HomogeneousPoly<F>>> {
    if ell.is_zero() {
        return Err(ForgeError::ZeroForm);
    }
    if ell.degree() != 1 {
        return Err(ForgeError::Schema(format!(
            "hyperplane must have degree 1, got {}",
            ell.degree()
        )));
    }
    let nvars = ell.nvars();
    let coeffs = ell.to_dense();
    // Dense degree-1 coefficients follow monomial rank order, which for
    // linear forms is x_0, x_1, ..., x_{n-1}.
    let pivot = coeffs
        .iter()
        .position(|c| !field.is_zero(c))
        .expect("nonzero form has a nonzero coefficient");
    let pivot_inv = field
        .inv(&coeffs[pivot])
        .expect("nonzero coefficient is invertible");
    // x_pivot = sum over the other variables of -c_j / c_pivot * x_j,
    // written directly in the renumbered variables.
    let solved: Vec<F::Elem> = (0..nvars)
        .filter(|&j| j != pivot)
        .map(|j| field.neg(&field.mul(&coeffs[j], &pivot_inv)))
        .collect();
    let solved = HomogeneousPoly::from_dense(field.clone(), nvars - 1, 1, &solved);

    gens.iter()
        .map(|gen| {
            if gen.nvars() != nvars {
                return Err(ForgeError::Schema(format!(
                    "generator has {} variables, hyperplane has {nvars}",
                    gen.nvars()
                )));
            }
            substitute_pivot(field, gen, pivot, &solved)
        })
        .collect()
}

/// Rewrites `gen` with `x_pivot` replaced by `solved` (a linear form in
/// the renumbered variables), producing a form in `nvars - 1` variables.
fn substitute_pivot<F: Field>(
    field: &F,
    gen: &HomogeneousPoly<F>,
    pivot: usize,
    solved: &HomogeneousPoly<F>,
) -> ForgeResult<HomogeneousPoly<F>> {
    let nvars = gen.nvars();
    let deg = gen.degree();
    let mut powers: Vec<HomogeneousPoly<F>> = Vec::with_capacity(deg + 1);
    powers.push(HomogeneousPoly::monomial(
        field.clone(),
        nvars - 1,
        &vec![0u8; nvars - 1],
        field.one(),
    ));
    for e in 1..=deg {
        let next = powers[e - 1].mul(solved)?;
        powers.push(next);
    }

    let mut out = HomogeneousPoly::zero(field.clone(), nvars - 1, deg);
    for (expo, coeff) in gen.terms() {
        let mut reduced = vec![0u8; nvars - 1];
        for (i, &e) in expo.iter().enumerate() {
            if i < pivot {
                reduced[i] = e;
            } else if i > pivot {
                reduced[i - 1] = e;
            }
        }
        let rest = HomogeneousPoly::monomial(field.clone(), nvars - 1, &reduced, coeff.clone());
        let term = rest.mul(&powers[expo[pivot] as usize])?;
        out = out.add(&term)?;
    }
    Ok(out)
}
