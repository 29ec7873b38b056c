//! The real moment-angle manifold of a simple polytope as an explicit
//! chamber complex, its `(Z₂)^m` action, and the filtration by partial
//! doublings.

mod complex;
mod filtration;
mod group;
mod union_find;

pub use complex::{
    build_chamber_complex, build_chamber_complex_with, connected_components,
    euler_characteristic, euler_characteristic_closed_form, fixed_point_components,
    orientability, Cell, ChamberComplex, FixedSet, Orientation, DEFAULT_FACET_GUARD,
};
pub use filtration::{
    classify_edge_types, doubling_filtration, EdgeClassification, EdgeRecord, EdgeType,
    FiltrationStage, StageFacet,
};
pub use group::{subgroup_mask, GroupElement};
pub use union_find::UnionFind;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{m} facets exceed the guard of {guard}")]
    GuardExceeded { m: usize, guard: usize },
    #[error("no facet with index {0}")]
    NoSuchFacet(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSetSummary {
    pub facet: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageSummary {
    pub j: usize,
    pub facets: usize,
    pub type1_edges: usize,
    pub type2_edges: usize,
}

/// Wire form of a complex summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub m: usize,
    pub cells_by_dim: Vec<usize>,
    pub euler: i64,
    pub components: usize,
    pub orientable: bool,
    pub fixed_sets: Vec<FixedSetSummary>,
    pub filtration: Vec<StageSummary>,
}

pub fn summarize(z: &ChamberComplex) -> ComplexSummary {
    let fixed_sets = (0..z.m())
        .map(|i| {
            let fs = fixed_point_components(z, i).expect("facet index in range");
            FixedSetSummary {
                facet: i,
                components: fs.components,
            }
        })
        .collect();
    let filtration = doubling_filtration(z)
        .iter()
        .map(|s| {
            let c = classify_edge_types(z, s);
            StageSummary {
                j: s.j,
                facets: s.facets.len(),
                type1_edges: c.type1,
                type2_edges: c.type2,
            }
        })
        .collect();
    ComplexSummary {
        m: z.m(),
        cells_by_dim: z.cells_by_dim(),
        euler: euler_characteristic(z),
        components: connected_components(z),
        orientable: orientability(z).orientable,
        fixed_sets,
        filtration,
    }
}
