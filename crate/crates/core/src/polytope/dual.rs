use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::{validate_polytope, CombPolytope, PolytopeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SphereError {
    #[error("sphere has no facets")]
    Empty,
    #[error("facet {0} has the wrong size for a pure complex")]
    NotPure(usize),
    #[error("facet {facet} uses vertex {vertex} outside 0..{vertex_count}")]
    VertexOutOfRange {
        facet: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("ridge {ridge:?} lies in {count} facets instead of 2")]
    NotPseudomanifold { ridge: Vec<usize>, count: usize },
    #[error("Euler characteristic {found}, a sphere of this dimension has {expected}")]
    WrongEuler { found: i64, expected: i64 },
    #[error("vertex {0} lies in no facet")]
    UnusedVertex(usize),
}

/// A simplicial `(n-1)`-sphere given by its facets (sorted `n`-sets of
/// vertices `0..vertex_count`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialSphere {
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialSphere {
    pub fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self, SphereError> {
        let Some(first) = facets.first() else {
            return Err(SphereError::Empty);
        };
        let size = first.len();
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for (i, f) in facets.iter().enumerate() {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() != size || size == 0 {
                return Err(SphereError::NotPure(i));
            }
            if let Some(&vertex) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(SphereError::VertexOutOfRange {
                    facet: i,
                    vertex,
                    vertex_count,
                });
            }
            sorted.push(f);
        }
        sorted.sort();
        let mut used = vec![false; vertex_count];
        for f in &sorted {
            for &v in f {
                used[v] = true;
            }
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(SphereError::UnusedVertex(v));
        }

        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for f in &sorted {
            for skip in 0..f.len() {
                let mut r = f.clone();
                r.remove(skip);
                *ridges.entry(r).or_default() += 1;
            }
        }
        if let Some((ridge, &count)) = ridges.iter().find(|(_, &c)| c != 2) {
            return Err(SphereError::NotPseudomanifold {
                ridge: ridge.clone(),
                count,
            });
        }

        let sphere = SimplicialSphere {
            vertex_count,
            facets: sorted,
        };
        let expected = sphere.expected_euler();
        let found = sphere.euler_characteristic();
        if found != expected {
            return Err(SphereError::WrongEuler { found, expected });
        }
        Ok(sphere)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Sorted list of sorted facets.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension of the sphere (facet size minus one).
    pub fn dim(&self) -> usize {
        self.facets[0].len() - 1
    }

    pub fn expected_euler(&self) -> i64 {
        if self.dim().is_multiple_of(2) {
            2
        } else {
            0
        }
    }

    /// Alternating count of all nonempty faces.
    pub fn euler_characteristic(&self) -> i64 {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            for mask in 1u32..(1 << f.len()) {
                faces.insert(
                    (0..f.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| f[i])
                        .collect(),
                );
            }
        }
        faces
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// True when `face` (sorted) is contained in some facet.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets
            .iter()
            .any(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
    }

    /// Facets containing `face`.
    pub fn star(&self, face: &[usize]) -> Vec<&Vec<usize>> {
        self.facets
            .iter()
            .filter(|f| face.iter().all(|v| f.binary_search(v).is_ok()))
            .collect()
    }

    /// The simple polytope whose boundary is dual to this sphere: sphere
    /// vertices become facets, sphere facets become vertices.
    pub fn to_polytope(&self) -> Result<CombPolytope, PolytopeError> {
        validate_polytope(
            self.dim() + 1,
            self.vertex_count,
            self.facets.clone(),
            None,
        )
    }
}

/// The boundary of the dual simplicial polytope `P*`: one vertex per facet
/// of `P`, one simplex per vertex of `P`.
pub fn dual_sphere(p: &CombPolytope) -> SimplicialSphere {
    SimplicialSphere::new(p.facet_count(), p.vertices().to_vec())
        .expect("a valid simple polytope has a sphere as dual boundary")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polytope::combinatorial_isomorphic;

    #[test]
    fn simplex_is_self_dual() {
        let s = dual_sphere(&CombPolytope::simplex(3));
        assert_eq!(s.vertex_count(), 4);
        assert_eq!(s.facets().len(), 4);
        assert_eq!(s.euler_characteristic(), 2);
    }

    #[test]
    fn cube_dual_is_octahedron() {
        let s = dual_sphere(&corpus::cube(3));
        assert_eq!((s.vertex_count(), s.facets().len()), (6, 8));
        // every octahedron vertex has degree 4 in the 1-skeleton
        for v in 0..6 {
            assert_eq!(s.star(&[v]).len(), 4);
        }
    }

    #[test]
    fn prism_dual_is_bipyramid() {
        let s = dual_sphere(&corpus::prism(3));
        assert_eq!((s.vertex_count(), s.facets().len()), (5, 6));
    }

    #[test]
    fn redualizing_gives_back_the_polytope() {
        for p in [corpus::cube(3), corpus::prism(3), corpus::dodecahedron()] {
            let back = dual_sphere(&p).to_polytope().unwrap();
            assert!(combinatorial_isomorphic(&p, &back).is_some());
        }
    }

    #[test]
    fn rejects_non_pseudomanifold() {
        let err = SimplicialSphere::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap_err();
        assert!(matches!(err, SphereError::NotPseudomanifold { .. }));
    }
}
