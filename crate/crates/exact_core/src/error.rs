//! Error types for field construction and linear algebra.

use thiserror::Error;

/// Errors raised while validating or parsing a field description.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is outside the supported range 2 <= p < 2^31")]
    PrimeOutOfRange(u64),
    #[error("extension degree {0} is outside the supported range 1..=16")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus} is reducible over GF(2), cannot define GF(2^{e})")]
    ReducibleModulus { e: u32, modulus: u64 },
    #[error("modulus {modulus} does not have degree {e}")]
    ModulusDegreeMismatch { e: u32, modulus: u64 },
    #[error("{0}")]
    Parse(String),
}

/// Errors raised by subspace and matrix operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix dimensions incompatible: {0}x{1} times {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    /// Kept for API completeness: the rational rank path retries prime
    /// selection internally and falls back to fraction-free elimination,
    /// which always terminates, so this variant is never constructed by the
    /// shipped kernels.
    #[error("modular ranks disagreed and no exact fallback was available")]
    ModularDisagreement,
}
