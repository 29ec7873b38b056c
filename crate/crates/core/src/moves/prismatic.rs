use std::collections::HashSet;

use serde::Serialize;

use crate::polytope::{facet_graph, CombPolytope, FacetGraph};

use super::MoveError;

/// A cyclic sequence of facets in Andreev's sense: consecutive facets meet,
/// non-consecutive ones do not, and the `k` edges between consecutive
/// facets share no vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrismaticCircuit {
    pub facets: Vec<usize>,
    /// `edges[i]` is the vertex set of `facets[i] ∩ facets[i + 1]`.
    pub edges: Vec<Vec<usize>>,
}

/// All prismatic `k`-circuits of a 3-polytope, each listed once with its
/// smallest facet first and the smaller neighbour second.
pub fn prismatic_circuits(p: &CombPolytope, k: usize) -> Result<Vec<PrismaticCircuit>, MoveError> {
    if p.dim() != 3 {
        return Err(MoveError::DimensionUnsupported(p.dim()));
    }
    if k < 3 {
        return Ok(Vec::new());
    }
    let g = facet_graph(p);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    for start in 0..p.facet_count() {
        path.clear();
        path.push(start);
        extend(p, &g, k, &mut path, &mut out);
    }
    Ok(out)
}

fn extend(
    p: &CombPolytope,
    g: &FacetGraph,
    k: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<PrismaticCircuit>,
) {
    let start = path[0];
    if path.len() == k {
        let last = path[k - 1];
        // canonical orientation: second entry smaller than last
        if g.adjacent(last, start) && path[1] < last {
            let c = build(p, path);
            if c.is_prismatic(g) {
                out.push(c);
            }
        }
        return;
    }
    let last = *path.last().expect("path is nonempty");
    for &next in g.neighbors(last) {
        if next <= start || path.contains(&next) {
            continue;
        }
        path.push(next);
        extend(p, g, k, path, out);
        path.pop();
    }
}

fn build(p: &CombPolytope, facets: &[usize]) -> PrismaticCircuit {
    let k = facets.len();
    let edges = (0..k)
        .map(|i| {
            let mut pair = [facets[i], facets[(i + 1) % k]];
            pair.sort_unstable();
            p.vertices_on(&pair)
        })
        .collect();
    PrismaticCircuit {
        facets: facets.to_vec(),
        edges,
    }
}

impl PrismaticCircuit {
    /// Checks all three defining conditions from scratch.
    pub fn is_prismatic(&self, g: &FacetGraph) -> bool {
        let k = self.facets.len();
        let distinct: HashSet<usize> = self.facets.iter().copied().collect();
        if distinct.len() != k || k < 3 {
            return false;
        }
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                if g.adjacent(self.facets[i], self.facets[j]) != consecutive {
                    return false;
                }
            }
        }
        let mut seen = HashSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_empty() && e.iter().all(|v| seen.insert(*v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn simplex_has_none() {
        assert!(prismatic_circuits(&CombPolytope::simplex(3), 3).unwrap().is_empty());
        assert!(prismatic_circuits(&CombPolytope::simplex(3), 4).unwrap().is_empty());
    }

    #[test]
    fn prism_has_its_quadrilateral_belt() {
        let c = prismatic_circuits(&corpus::prism(3), 3).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].facets, vec![0, 1, 2]);
    }

    #[test]
    fn cube_has_three_belts() {
        let c = prismatic_circuits(&corpus::cube(3), 4).unwrap();
        assert_eq!(c.len(), 3);
        assert!(prismatic_circuits(&corpus::cube(3), 3).unwrap().is_empty());
    }

    #[test]
    fn dodecahedron_has_none() {
        let d = corpus::dodecahedron();
        assert!(prismatic_circuits(&d, 3).unwrap().is_empty());
        assert!(prismatic_circuits(&d, 4).unwrap().is_empty());
    }

    #[test]
    fn non_three_dimensional_rejected() {
        assert!(prismatic_circuits(&corpus::cube(4), 4).is_err());
    }
}
