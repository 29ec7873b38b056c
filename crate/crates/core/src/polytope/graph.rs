use super::CombPolytope;

/// Facets as nodes, joined when they meet in a codimension-two face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetGraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

pub fn facet_graph(p: &CombPolytope) -> FacetGraph {
    let m = p.facet_count();
    let mut adj = vec![vec![false; m]; m];
    for set in p.vertices() {
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                adj[set[i]][set[j]] = true;
                adj[set[j]][set[i]] = true;
            }
        }
    }
    let mut edges = Vec::new();
    let mut adjacency = vec![Vec::new(); m];
    for a in 0..m {
        for b in 0..m {
            if adj[a][b] {
                adjacency[a].push(b);
                if a < b {
                    edges.push((a, b));
                }
            }
        }
    }
    FacetGraph {
        node_count: m,
        edges,
        adjacency,
    }
}

impl FacetGraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, f: usize) -> &[usize] {
        &self.adjacency[f]
    }

    pub fn degree(&self, f: usize) -> usize {
        self.adjacency[f].len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn simplex_graph_is_complete() {
        let g = facet_graph(&CombPolytope::simplex(3));
        assert_eq!(g.edges().len(), 6);
    }

    #[test]
    fn cube_graph_is_octahedral() {
        let g = facet_graph(&corpus::cube(3));
        assert_eq!(g.edges().len(), 12);
        for f in 0..3 {
            assert!(!g.adjacent(f, f + 3));
            assert_eq!(g.degree(f), 4);
        }
    }

    #[test]
    fn prism_graph() {
        let p = corpus::prism(3);
        let g = facet_graph(&p);
        let tri: Vec<usize> = (0..5).filter(|&f| p.facet_vertices(f).len() == 3).collect();
        assert_eq!(tri.len(), 2);
        assert!(!g.adjacent(tri[0], tri[1]));
        for f in 0..5 {
            if !tri.contains(&f) {
                assert_eq!(g.degree(f), 4);
            } else {
                assert_eq!(g.degree(f), 3);
            }
        }
        assert_eq!(g.edges().len(), 9);
    }
}
