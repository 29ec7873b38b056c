use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::complex::ChamberComplex;
use super::group::GroupElement;

/// `F_{i,g} = η(F_i × {g})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StageFacet {
    pub facet: usize,
    pub g: u32,
}

/// `Y^(j) = η(P × H_j)` with `H_j = ⟨e_0, …, e_{j-1}⟩`.
///
/// Facets are numbered from 0, so the boundary of stage `j` is made of the
/// `F_{i,g}` with `i ≥ j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationStage {
    pub j: usize,
    pub subgroup_mask: u32,
    pub facets: Vec<StageFacet>,
    pub chambers: usize,
    pub cells_by_dim: Vec<usize>,
    /// Codimension-one cells of the stage with a single incident chamber.
    pub boundary_cells: Vec<usize>,
    /// The boundary cells are exactly the `F_{i,g}`, one cell each.
    pub boundary_identity_holds: bool,
    /// Stage `j + 1` is this stage and its `e_j`-translate, meeting exactly
    /// in the cells over faces inside `F_j`. `None` for the last stage.
    pub doubling_holds: Option<bool>,
}

fn in_stage(z: &ChamberComplex, id: usize, h: u32) -> bool {
    z.cell(id).rep.bits() & !h == 0
}

fn stage_cells(z: &ChamberComplex, h: u32) -> BTreeSet<usize> {
    (0..z.cell_count()).filter(|&id| in_stage(z, id, h)).collect()
}

/// Builds every stage `0..=m` and checks the boundary and doubling laws.
pub fn doubling_filtration(z: &ChamberComplex) -> Vec<FiltrationStage> {
    let m = z.m();
    let top = z.lattice().top();
    (0..=m)
        .map(|j| {
            let h: u32 = ((1u64 << j) - 1) as u32;
            let cells = stage_cells(z, h);

            let mut cells_by_dim = vec![0; z.dim() + 1];
            for &id in &cells {
                cells_by_dim[z.cell_dim(id)] += 1;
            }

            let facets: Vec<StageFacet> = (j..m)
                .flat_map(|i| (0..1u32 << j).map(move |g| StageFacet { facet: i, g }))
                .collect();

            let boundary_cells: Vec<usize> = cells
                .iter()
                .copied()
                .filter(|&id| z.lattice().face(z.cell(id).face).facets.len() == 1)
                .filter(|&id| {
                    z.coboundary(id)
                        .into_iter()
                        .filter(|&c| in_stage(z, c, h))
                        .count()
                        == 1
                })
                .collect();

            let facet_cells: BTreeSet<usize> = facets
                .iter()
                .map(|sf| {
                    let face = z.lattice().find(&[sf.facet]).expect("facet face exists");
                    z.cell_id(face, GroupElement(sf.g))
                })
                .collect();
            let boundary_set: BTreeSet<usize> = boundary_cells.iter().copied().collect();
            let boundary_identity_holds =
                facet_cells.len() == facets.len() && facet_cells == boundary_set;

            let doubling_holds = (j < m).then(|| {
                let e = GroupElement::generator(j);
                let moved: BTreeSet<usize> = cells.iter().map(|&id| z.act(e, id)).collect();
                let next = stage_cells(z, h | 1 << j);
                let union: BTreeSet<usize> = cells.union(&moved).copied().collect();
                let glued: BTreeSet<usize> = cells.intersection(&moved).copied().collect();
                let over_fj: BTreeSet<usize> = cells
                    .iter()
                    .copied()
                    .filter(|&id| z.face_mask(z.cell(id).face) >> j & 1 == 1)
                    .collect();
                let chambers_next = next
                    .iter()
                    .filter(|&&id| z.cell(id).face == top)
                    .count();
                let chambers_here = cells.iter().filter(|&&id| z.cell(id).face == top).count();
                union == next && glued == over_fj && chambers_next == 2 * chambers_here
            });

            FiltrationStage {
                j,
                subgroup_mask: h,
                chambers: cells.iter().filter(|&&id| z.cell(id).face == top).count(),
                facets,
                cells_by_dim,
                boundary_cells,
                boundary_identity_holds,
                doubling_holds,
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EdgeType {
    /// The two stage facets lie over different facets of `P`.
    TypeI,
    /// Both lie over the same facet of `P`.
    TypeII,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeRecord {
    pub cell: usize,
    /// The two facets of `P` whose intersection carries the cell.
    pub face: (usize, usize),
    pub stage_facets: [StageFacet; 2],
    pub kind: EdgeType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeClassification {
    pub j: usize,
    pub edges: Vec<EdgeRecord>,
    pub type1: usize,
    pub type2: usize,
    /// Boundary codimension-two cells not lying on exactly two stage
    /// facets. Empty for a well-formed stage.
    pub untagged: Vec<usize>,
}

/// Tags every codimension-two cell on the boundary of the stage by whether
/// its two boundary facets come from different facets of `P` (Type-I) or
/// from the same one (Type-II). Stage 0 is a single copy of `P`, so all
/// its edges are Type-I.
pub fn classify_edge_types(z: &ChamberComplex, stage: &FiltrationStage) -> EdgeClassification {
    let h = stage.subgroup_mask;
    let boundary: HashMap<usize, StageFacet> = stage
        .boundary_cells
        .iter()
        .map(|&id| {
            let c = z.cell(id);
            let facet = z.lattice().face(c.face).facets[0];
            (id, StageFacet { facet, g: c.rep.bits() })
        })
        .collect();

    let mut edges = Vec::new();
    let mut untagged = Vec::new();
    for f in 0..z.lattice().len() {
        let face = z.lattice().face(f);
        if face.facets.len() != 2 {
            continue;
        }
        for id in z.cells_over(f) {
            if !in_stage(z, id, h) {
                continue;
            }
            let mut on: Vec<StageFacet> = z
                .coboundary(id)
                .into_iter()
                .filter_map(|c| boundary.get(&c).copied())
                .collect();
            on.sort();
            on.dedup();
            match on.len() {
                0 => {}
                2 => {
                    let kind = if on[0].facet == on[1].facet {
                        EdgeType::TypeII
                    } else {
                        EdgeType::TypeI
                    };
                    edges.push(EdgeRecord {
                        cell: id,
                        face: (face.facets[0], face.facets[1]),
                        stage_facets: [on[0], on[1]],
                        kind,
                    });
                }
                _ => untagged.push(id),
            }
        }
    }
    let type2 = edges.iter().filter(|e| e.kind == EdgeType::TypeII).count();
    EdgeClassification {
        j: stage.j,
        type1: edges.len() - type2,
        type2,
        edges,
        untagged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polytope::CombPolytope;
    use crate::zcomplex::build_chamber_complex;

    #[test]
    fn triangle_stages() {
        let z = build_chamber_complex(&CombPolytope::simplex(2)).unwrap();
        let stages = doubling_filtration(&z);
        assert_eq!(stages.len(), 4);
        assert_eq!(stages[1].facets.len(), 4);
        assert_eq!(stages[2].facets.len(), 4);
        assert!(stages[3].facets.is_empty());
        assert!(stages[3].boundary_cells.is_empty());
        for s in &stages {
            assert!(s.boundary_identity_holds);
            assert_ne!(s.doubling_holds, Some(false));
        }
    }

    #[test]
    fn simplex_stage_one_edges() {
        let z = build_chamber_complex(&CombPolytope::simplex(3)).unwrap();
        let stages = doubling_filtration(&z);
        assert_eq!(stages[2].facets.len(), 8);
        let c = classify_edge_types(&z, &stages[1]);
        assert!(c.untagged.is_empty());
        let mut over: Vec<(usize, usize)> = c
            .edges
            .iter()
            .filter(|e| e.kind == EdgeType::TypeII)
            .map(|e| e.face)
            .collect();
        over.sort();
        assert_eq!(over, vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(c.type1, 6);

        let c0 = classify_edge_types(&z, &stages[0]);
        assert_eq!((c0.type1, c0.type2), (6, 0));
    }

    #[test]
    fn cube_stage_one_type_two_edges_ring_the_glued_face() {
        let z = build_chamber_complex(&corpus::cube(3)).unwrap();
        let stages = doubling_filtration(&z);
        let c = classify_edge_types(&z, &stages[1]);
        assert_eq!(c.type2, 4);
        assert!(c.edges.iter().all(|e| e.kind == EdgeType::TypeI || e.face.0 == 0));
    }
}
