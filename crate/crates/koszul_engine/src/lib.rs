//! Exact syzygy computations for graded quotient rings.
//!
//! Given a quotient `R = S / I` presented degree by degree (see the
//! `graded_ring` crate), this crate assembles the weight-graded strands of
//! the exterior-power complex on `V = R_1`, computes their differential
//! ranks exactly, and reports syzygy space dimensions and whole graded
//! Betti tables.  Everything runs over the exact field backends of
//! `exact_core`, so a table entry is a theorem about the ring, not a
//! floating-point estimate.
//!
//! The main entry points are [`betti_table`] for a full table,
//! [`koszul_dim`] for a single position, [`differential_matrix`] for the
//! raw maps, and [`retraction_identity_check`] for the characteristic
//! obstruction that makes weight-zero statements field-sensitive.  Tables
//! render to a text grid or JSON via [`render_text`], [`render_json`], and
//! [`parse_json`].

pub mod betti;
pub mod differential;
pub mod error;
pub mod render;
pub mod retract;
pub mod wedge;

pub use betti::{betti_table, expected_piece_dims, koszul_dim, BettiTable};
pub use differential::{differential_matrix, differential_squares_to_zero};
pub use error::KoszulError;
pub use render::{parse_json, render_json, render_text};
pub use retract::retraction_identity_check;
pub use wedge::{wedge_count, wedge_rank, wedge_tuples, wedge_unrank};
