//! Construction of canonical curves and K3-type surfaces as graded
//! quotients: nodal plane models embedded by adjoints, complete
//! intersections, hyperplane sections, and a named reproducible corpus.
//!
//! Everything is gated: sampled objects are accepted only when exact
//! dimension checks (ordinary multiplicities, adjoint dimension, the
//! Riemann-Roch and K3 Hilbert profiles) confirm they look like what they
//! claim to be, and serialized inputs are fully revalidated on ingest.

pub mod adjoint;
pub mod conditions;
pub mod corpus;
pub mod error;
pub mod ideals;
pub mod model;
pub mod points;
pub mod schema;

pub use adjoint::{adjoint_basis, canonical_quotient};
pub use corpus::{
    build_entry, build_k3_with_section, corpus, find_entry, k3_dimension, BuiltEntry, CorpusEntry,
    Recipe,
};
pub use error::ForgeError;
pub use ideals::{ci_ideal, ci_k3_ideal, hyperplane_section, random_form, random_hyperplane};
pub use model::{
    build_plane_model, canonical_dimension, certify_smooth, plane_genus, PlaneModel,
    MAX_PLANE_DEGREE,
};
pub use points::{plane_point_count, sample_distinct_points, PlanePoint};
pub use schema::{
    coord_to_elem, ingest_ideal, ingest_plane_model, parse_input, render_ideal,
    render_plane_model, validate_meta, CoordLiteral, ExceptionalClass, IdealFile, InputFile, Meta,
    MetaKind, PlaneModelFile, SingularPointEntry,
};

/// Crate-wide result alias.
pub type ForgeResult<T> = Result<T, ForgeError>;
