//! Homogeneous polynomial arithmetic and graded quotient rings.
//!
//! This crate sits between the raw field/linear-algebra layer and the
//! syzygy computations: it defines monomial bases and their canonical
//! order, sparse homogeneous polynomials with a small text grammar, graded
//! ideal pieces, and quotient rings presented by exact multiplication maps
//! `R_q -> R_{q+1}`.

pub mod error;
pub mod monomial;
pub mod poly;
pub mod quotient;

pub use error::RingError;
pub use monomial::{binomial, checked_binomial, checked_monomial_count, monomial_count, monomial_rank, monomial_unrank, monomials};
pub use poly::{parse_poly, HomogeneousPoly, MAX_DEGREE, MAX_NVARS};
pub use quotient::{ideal_piece, quotient_sequence, GradedQuotient, MultMap, QuotientKind};
