use std::collections::{BTreeSet, HashMap};

use super::CombPolytope;

/// A nonempty face, identified by the facets containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub facets: Vec<usize>,
    pub dim: usize,
    pub vertices: Vec<usize>,
}

/// All nonempty faces of a simple polytope with the codimension-one cover
/// relation. Index 0 is the polytope itself (empty facet set).
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    faces: Vec<Face>,
    index: HashMap<Vec<usize>, usize>,
    covers: Vec<(usize, usize)>,
}

/// Enumerates faces as the nonempty intersections of facet subsets.
///
/// In a simple polytope every subset of a vertex's facet set cuts out a
/// face of codimension equal to the subset size, so the faces are exactly
/// those subsets.
pub fn face_lattice(p: &CombPolytope) -> FaceLattice {
    let n = p.dim();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    for set in p.vertices() {
        for mask in 0u32..(1 << n) {
            let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| set[i]).collect();
            sets.insert(sub);
        }
    }
    let mut ordered: Vec<Vec<usize>> = sets.into_iter().collect();
    ordered.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let faces: Vec<Face> = ordered
        .into_iter()
        .map(|facets| Face {
            dim: n - facets.len(),
            vertices: p.vertices_on(&facets),
            facets,
        })
        .collect();
    let index: HashMap<Vec<usize>, usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.facets.clone(), i))
        .collect();

    let mut covers = Vec::new();
    for (i, face) in faces.iter().enumerate() {
        for extra in 0..p.facet_count() {
            if face.facets.binary_search(&extra).is_ok() {
                continue;
            }
            let mut sub = face.facets.clone();
            let pos = sub.binary_search(&extra).unwrap_err();
            sub.insert(pos, extra);
            if let Some(&j) = index.get(&sub) {
                covers.push((i, j));
            }
        }
    }

    FaceLattice {
        dim: n,
        faces,
        index,
        covers,
    }
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn top(&self) -> usize {
        0
    }

    /// Index of the face cut out by `facets` (must be sorted).
    pub fn find(&self, facets: &[usize]) -> Option<usize> {
        self.index.get(facets).copied()
    }

    /// Pairs `(face, subface)` with the subface one dimension lower.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Faces of each dimension, `f_vector()[d]` = number of `d`-faces.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0; self.dim + 1];
        for f in &self.faces {
            out[f.dim] += 1;
        }
        out
    }

    /// χ of the boundary sphere: alternating count over proper faces.
    pub fn boundary_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .filter(|f| f.dim < self.dim)
            .map(|f| if f.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }
}
