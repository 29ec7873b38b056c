//! Combinatorics of simple convex polytopes and their real moment-angle
//! manifolds.
//!
//! * [`polytope`]: incidence-based simple polytopes, face lattices, duality
//!   and isomorphism.
//! * [`moves`]: vertex-cuts and their inverse, recognition of polytopes
//!   built from the tetrahedron by vertex-cuts, bistellar flips, prismatic
//!   circuits.
//! * [`hrep`]: half-space presentations and the quadric model in `ℝᵐ`.
//! * [`zcomplex`]: the chamber complex `P × (Z₂)^m / ∼` and its doubling
//!   filtration.
//! * [`corpus`]: standard polytopes and random instances.
//! * [`cli`]: the command dispatcher behind the `rzpoly` binary.

pub mod cli;
pub mod corpus;
pub mod hrep;
pub mod moves;
pub mod polytope;
pub mod zcomplex;

pub use polytope::{CombPolytope, PolytopeError};
