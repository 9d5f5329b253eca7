//! Errors surfaced by the verification suite.

use thiserror::Error;

/// Failure modes of checks (as opposed to checks that run and report
/// `passed = false`, which are not errors).
#[derive(Debug, Error)]
pub enum CheckError {
    /// The check needs a full Betti table, but the input is partial.
    #[error("check requires a full Betti table; this one is partial")]
    PartialTable,

    /// A comparison's precondition gate failed (e.g. the surface side of
    /// a Lefschetz comparison does not have the K3 dimension profile).
    #[error("precondition gate failed: {0}")]
    GateFailed(String),

    /// The expected-table solver found the Euler system inconsistent with
    /// the assumed resolution shape.
    #[error("expected-table solve inconsistent at genus {genus}: {reason}")]
    InconsistentSolve { genus: usize, reason: String },

    /// A Clifford-index input outside the meaningful range `1..=g-2`.
    #[error("clifford index {cliff} out of range 1..={} for genus {genus}", .genus - 2)]
    InvalidCliff { cliff: usize, genus: usize },

    #[error(transparent)]
    Forge(#[from] curve_forge::ForgeError),

    #[error(transparent)]
    Koszul(#[from] koszul_engine::KoszulError),

    #[error(transparent)]
    Ring(#[from] graded_ring::RingError),
}
