//! Error type for polynomial parsing and quotient construction.

use exact_core::FieldError;
use thiserror::Error;

use crate::poly::{MAX_DEGREE, MAX_NVARS};

/// Errors raised by the graded-ring layer.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("polynomial is not homogeneous: found term degrees {0:?}")]
    NonHomogeneous(Vec<usize>),
    #[error("polynomial has no nonzero terms, so its degree is undetermined")]
    ZeroPolynomial,
    #[error("coefficient literal out of range")]
    CoefficientOverflow,
    #[error("degree {0} exceeds the supported maximum {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("variable count {0} exceeds the supported maximum {MAX_NVARS}")]
    TooManyVariables(usize),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("the ideal contains a nonzero linear form, so degree one is not free")]
    DegreeOneNotFree,
    #[error("monomial basis too large to materialize")]
    DimensionOverflow,
    #[error(transparent)]
    Field(#[from] FieldError),
}
