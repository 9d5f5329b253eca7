//! Points of the projective plane over an exact field.
//!
//! Points are kept in a canonical scaling — the first nonzero coordinate is
//! one — so equality of points is equality of coordinate triples.  Sampling
//! over a finite field draws uniformly from all `q^2 + q + 1` points via one
//! index; over the rationals it draws small-height affine points, which is
//! all the constructions need.

use exact_core::{Field, SplitMix64};

use crate::error::ForgeError;

/// A point of `P^2` in canonical scaling.
#[derive(Clone, Debug)]
pub struct PlanePoint<F: Field> {
    coords: [F::Elem; 3],
}

impl<F: Field> PartialEq for PlanePoint<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> PlanePoint<F> {
    /// Canonicalizes a coordinate triple; fails on `[0, 0, 0]`.
    pub fn new(field: &F, coords: [F::Elem; 3]) -> Result<Self, ForgeError> {
        let lead = coords
            .iter()
            .position(|c| !field.is_zero(c))
            .ok_or_else(|| ForgeError::Schema("projective point [0, 0, 0]".into()))?;
        let inv = field.inv(&coords[lead]).expect("leading coordinate is nonzero");
        let scaled: Vec<F::Elem> = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(PlanePoint {
            coords: [scaled[0].clone(), scaled[1].clone(), scaled[2].clone()],
        })
    }

    pub fn coords(&self) -> &[F::Elem; 3] {
        &self.coords
    }

    /// Index of the first coordinate equal to one (the canonical pivot).
    pub fn pivot(&self, field: &F) -> usize {
        self.coords
            .iter()
            .position(|c| !field.is_zero(c))
            .expect("canonical points are nonzero")
    }
}

/// Number of points of `P^2` over the field, if finite.
pub fn plane_point_count(field_order: Option<u64>) -> Option<u64> {
    field_order.map(|q| q * q + q + 1)
}

/// Draws one point, uniformly over a finite field; over the rationals, an
/// affine point with small integer coordinates.
pub fn sample_point<F: Field>(field: &F, rng: &mut SplitMix64) -> PlanePoint<F> {
    match field.spec().order() {
        Some(q) => {
            let idx = rng.next_below(q * q + q + 1);
            let coords = if idx < q * q {
                [
                    field.one(),
                    field.from_literal((idx / q) as i64),
                    field.from_literal((idx % q) as i64),
                ]
            } else if idx < q * q + q {
                [field.zero(), field.one(), field.from_literal((idx - q * q) as i64)]
            } else {
                [field.zero(), field.zero(), field.one()]
            };
            PlanePoint { coords }
        }
        None => {
            let a = field.from_int(rng.next_in_range(-30, 30));
            let b = field.from_int(rng.next_in_range(-30, 30));
            PlanePoint {
                coords: [field.one(), a, b],
            }
        }
    }
}

/// Draws `n` pairwise distinct points.  Errors when the plane is too small
/// to spread them out (fewer than `4 n` points available).
pub fn sample_distinct_points<F: Field>(
    field: &F,
    n: usize,
    rng: &mut SplitMix64,
) -> Result<Vec<PlanePoint<F>>, ForgeError> {
    if let Some(total) = plane_point_count(field.spec().order()) {
        if total < 4 * n as u64 {
            return Err(ForgeError::FieldTooSmall {
                needed: 4 * n,
                available: total,
            });
        }
    }
    let mut points: Vec<PlanePoint<F>> = Vec::with_capacity(n);
    let mut budget = 64 * (n + 1);
    while points.len() < n {
        budget -= 1;
        if budget == 0 {
            // Unreachable with the 4n size margin; defensive bail-out.
            return Err(ForgeError::ConstructionFailed {
                attempts: 64 * (n + 1),
                reason: "could not sample distinct points".into(),
            });
        }
        let p = sample_point(field, rng);
        if !points.contains(&p) {
            points.push(p);
        }
    }
    Ok(points)
}
