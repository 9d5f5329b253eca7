//! Error type for syzygy computations.

use graded_ring::RingError;
use thiserror::Error;

/// Errors raised while assembling differentials or Betti tables.
#[derive(Debug, Error)]
pub enum KoszulError {
    /// The quotient was truncated below the degree needed by the request.
    #[error("quotient is truncated at degree {have}, but degree {need} is required")]
    QmaxTooSmall { need: usize, have: usize },

    /// The averaging retraction needs to divide by `p`, which is impossible
    /// when the field characteristic divides `p`.
    #[error("field characteristic {ch} divides p = {p}; the averaging retraction does not exist")]
    CharDividesP { p: usize, ch: u64 },

    /// Betti tables are only defined here for genus at least two.
    #[error("genus {0} is too small for a Betti table")]
    GenusTooSmall(usize),

    /// A serialized Betti table could not be decoded.
    #[error("malformed Betti table JSON: {0}")]
    Json(String),

    /// An underlying graded-ring operation failed.
    #[error(transparent)]
    Ring(#[from] RingError),
}
