//! Exact arithmetic foundation: coefficient fields, a deterministic PRNG,
//! and dense/sparse linear algebra with per-field elimination kernels.
//!
//! Everything downstream — graded rings, syzygy computations, curve
//! constructions — is generic over [`Field`] and sees only exact results:
//! there is no floating point anywhere in the workspace.  The supported
//! fields are the rationals, prime fields GF(p) for `2 <= p < 2^31`, and
//! binary extensions GF(2^e) for `e <= 16`.

pub mod arith;
pub mod error;
pub mod field;
pub mod matrix;
pub mod rng;
pub mod sparse;
pub mod spec;
pub mod subspace;

pub use error::{FieldError, LinAlgError};
pub use field::{BinaryField, Field, Gf2, PrimeField, Rationals};
pub use matrix::{Matrix, Rref, Storage};
pub use rng::SplitMix64;
pub use spec::FieldSpec;
pub use subspace::Subspace;

// Re-exported so downstream crates name rational elements without adding a
// direct dependency.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Rank of a matrix.
pub fn mat_rank<F: Field>(m: &Matrix<F>) -> usize {
    m.rank()
}

/// Canonical basis of the right null space of a matrix.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    m.kernel()
}

/// Sum of two subspaces of the same ambient space.
pub fn subspace_sum<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>, LinAlgError> {
    a.sum(b)
}

/// Intersection of two subspaces of the same ambient space.
pub fn subspace_intersect<F: Field>(
    a: &Subspace<F>,
    b: &Subspace<F>,
) -> Result<Subspace<F>, LinAlgError> {
    a.intersect(b)
}

/// Canonical representative of `v` modulo `s`.
pub fn reduce_mod_subspace<F: Field>(
    v: &[F::Elem],
    s: &Subspace<F>,
) -> Result<Vec<F::Elem>, LinAlgError> {
    if v.len() != s.ambient_dim() {
        return Err(LinAlgError::AmbientMismatch(v.len(), s.ambient_dim()));
    }
    Ok(s.reduce(v))
}

/// Runs `$body` with `$f` bound to the concrete field described by a
/// [`FieldSpec`].  GF(2) dispatches to the bit-packed [`Gf2`] type rather
/// than the generic prime field.
///
/// ```
/// use exact_core::{with_field, Field, FieldSpec};
///
/// let spec: FieldSpec = "gf:101".parse().unwrap();
/// let two = with_field!(spec, |f| f.elem_string(&f.from_int(2)));
/// assert_eq!(two, "2");
/// ```
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        match $spec {
            $crate::FieldSpec::Rationals => {
                let $f = $crate::Rationals::new();
                $body
            }
            $crate::FieldSpec::PrimeField { p: 2 } => {
                let $f = $crate::Gf2::new();
                $body
            }
            $crate::FieldSpec::PrimeField { p } => {
                let $f = $crate::PrimeField::new(p).expect("spec was validated");
                $body
            }
            $crate::FieldSpec::BinaryExt { e, modulus } => {
                let $f = $crate::BinaryField::new(e, modulus).expect("spec was validated");
                $body
            }
        }
    }};
}
