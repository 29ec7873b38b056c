//! Vertex-cuts, their inverses, recognition of polytopes built from the
//! simplex by vertex-cuts, bistellar flips and prismatic circuits.

mod cut;
mod flip;
mod prismatic;
mod recognize;

pub use cut::{collapse_admissible, simplex_facet_collapse, vertex_cut};
pub use flip::{
    bistellar_flip, psc_flip_certificate, verify_flip_certificate, FlipCertificateJson, FlipKind,
    FlipMove, FlipSearch,
};
pub use prismatic::{prismatic_circuits, PrismaticCircuit};
pub use recognize::{
    recognize_vertexcut_reducible, CollapseStep, Recognition, ReductionTrace, TraceJson,
};

use thiserror::Error;

use crate::polytope::PolytopeError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("no vertex with index {0}")]
    NoSuchVertex(usize),
    #[error("no facet with index {0}")]
    NoSuchFacet(usize),
    #[error("facet {0} is not a simplex with n neighbours")]
    NotSimplexFacet(usize),
    #[error("collapsing facet {0} would duplicate an existing vertex")]
    CollapseInadmissible(usize),
    #[error("polytope is already a simplex")]
    IsSimplex,
    #[error("only dimension 3 is supported here, got {0}")]
    DimensionUnsupported(usize),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("link of {0:?} is not the boundary of a missing simplex")]
    LinkNotStandard(Vec<usize>),
    #[error("flip produced an invalid sphere: {0}")]
    FlipBroke(String),
    #[error("search exceeded {0} states")]
    GuardExceeded(usize),
    #[error("trace does not match the polytope it is replayed on")]
    TraceMismatch,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}
