//! Error type for model construction and ingestion.

use exact_core::FieldError;
use graded_ring::RingError;
use thiserror::Error;

/// Errors raised while constructing or ingesting curve and surface models.
#[derive(Debug, Error)]
pub enum ForgeError {
    /// No valid model was found within the resampling budget; the field is
    /// too small or the singularity specification inconsistent.
    #[error("construction failed after {attempts} attempts: {reason}")]
    ConstructionFailed { attempts: usize, reason: String },

    /// The imposed conditions admit no nonzero form at all.
    #[error("the linear system of degree-{degree} forms with the imposed multiplicities is empty")]
    EmptyLinearSystem { degree: usize },

    /// The adjoint space has the wrong dimension (non-ordinary or special
    /// point configuration).
    #[error("adjoint space has dimension {got}, expected the genus {expected}")]
    AdjointDimensionMismatch { expected: usize, got: usize },

    /// A construction needs strictly more geometry than the field offers.
    #[error("field with {available} projective plane points cannot host {needed} spread-out points")]
    FieldTooSmall { needed: usize, available: u64 },

    /// The target genus is below the supported range.
    #[error("target genus {0} is below 3")]
    GenusTooSmall(i64),

    /// A hyperplane section was requested along the zero form.
    #[error("the sectioning linear form is zero")]
    ZeroForm,

    /// An input file does not match the documented schema.
    #[error("schema error: {0}")]
    Schema(String),

    /// An unknown corpus entry name.
    #[error("unknown corpus entry {0:?}")]
    UnknownEntry(String),

    #[error(transparent)]
    Field(#[from] FieldError),

    #[error(transparent)]
    Ring(#[from] RingError),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
