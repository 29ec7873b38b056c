//! Simple convex polytopes described by facet–vertex incidence.
//!
//! A vertex of a simple `n`-polytope lies in exactly `n` facets, so the
//! whole combinatorial type is recorded by listing, for every vertex, the
//! sorted set of facets containing it.

mod dual;
mod graph;
mod iso;
mod lattice;

pub use dual::{dual_sphere, SimplicialSphere, SphereError};
pub use graph::{facet_graph, FacetGraph};
pub use iso::combinatorial_isomorphic;
pub use lattice::{face_lattice, Face, FaceLattice};

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("polytope has no vertices")]
    Empty,
    #[error("dimension must be at least 1")]
    BadDimension,
    #[error("vertex {vertex} references facet {facet}, but there are only {facet_count} facets")]
    FacetOutOfRange {
        vertex: usize,
        facet: usize,
        facet_count: usize,
    },
    #[error("vertex {vertex} lies in {found} facets; a simple {dim}-polytope needs exactly {dim}")]
    NotSimple {
        vertex: usize,
        found: usize,
        dim: usize,
    },
    #[error("vertices {first} and {second} have identical facet sets")]
    DuplicateVertex { first: usize, second: usize },
    #[error("facet {facet} contains no vertex")]
    UnusedFacet { facet: usize },
    #[error("incidence is not that of a convex polytope: {reason}")]
    NotPolytopal { reason: String },
    #[error("{labels} facet labels given for {facets} facets")]
    LabelCount { labels: usize, facets: usize },
    #[error("malformed polytope JSON: {0}")]
    Json(String),
}

/// A validated simple polytope.
///
/// Immutable after construction. Vertex facet sets are sorted and the
/// vertex list keeps the caller's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombPolytope {
    dim: usize,
    facet_count: usize,
    vertices: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// On-disk form: `{"dim", "facets", "facet_labels"?, "vertices"}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolytopeFile {
    pub dim: usize,
    pub facets: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facet_labels: Option<Vec<String>>,
    pub vertices: Vec<Vec<usize>>,
}

/// Checks raw incidence data and builds a [`CombPolytope`].
pub fn validate_polytope(
    dim: usize,
    facet_count: usize,
    vertices: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
) -> Result<CombPolytope, PolytopeError> {
    if dim == 0 {
        return Err(PolytopeError::BadDimension);
    }
    if vertices.is_empty() {
        return Err(PolytopeError::Empty);
    }
    if let Some(l) = &labels {
        if l.len() != facet_count {
            return Err(PolytopeError::LabelCount {
                labels: l.len(),
                facets: facet_count,
            });
        }
    }
    let mut sorted = Vec::with_capacity(vertices.len());
    for (v, raw) in vertices.into_iter().enumerate() {
        let mut set = raw;
        set.sort_unstable();
        set.dedup();
        if let Some(&facet) = set.iter().find(|&&f| f >= facet_count) {
            return Err(PolytopeError::FacetOutOfRange {
                vertex: v,
                facet,
                facet_count,
            });
        }
        if set.len() != dim {
            return Err(PolytopeError::NotSimple {
                vertex: v,
                found: set.len(),
                dim,
            });
        }
        sorted.push(set);
    }

    let mut seen: HashMap<&[usize], usize> = HashMap::new();
    for (v, set) in sorted.iter().enumerate() {
        if let Some(&first) = seen.get(set.as_slice()) {
            return Err(PolytopeError::DuplicateVertex { first, second: v });
        }
        seen.insert(set, v);
    }

    let mut used = vec![false; facet_count];
    for set in &sorted {
        for &f in set {
            used[f] = true;
        }
    }
    if let Some(facet) = used.iter().position(|u| !u) {
        return Err(PolytopeError::UnusedFacet { facet });
    }

    let p = CombPolytope {
        dim,
        facet_count,
        vertices: sorted,
        labels,
    };
    p.check_polytopal()?;
    Ok(p)
}

fn not_polytopal(reason: impl Into<String>) -> PolytopeError {
    PolytopeError::NotPolytopal {
        reason: reason.into(),
    }
}

impl CombPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.facet_count
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Facet sets of all vertices, each sorted ascending.
    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> Option<&[usize]> {
        self.vertices.get(v).map(Vec::as_slice)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn find_vertex(&self, facets: &[usize]) -> Option<usize> {
        self.vertices.iter().position(|s| s.as_slice() == facets)
    }

    /// Vertices lying on facet `f`.
    pub fn facet_vertices(&self, f: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| self.vertices[v].binary_search(&f).is_ok())
            .collect()
    }

    /// Vertices lying on every facet of `facets`.
    pub fn vertices_on(&self, facets: &[usize]) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| facets.iter().all(|f| self.vertices[v].binary_search(f).is_ok()))
            .collect()
    }

    /// Edges of the vertex graph: pairs of vertices sharing `n - 1` facets.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut by_ridge: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (v, set) in self.vertices.iter().enumerate() {
            for skip in 0..set.len() {
                let mut ridge = set.clone();
                ridge.remove(skip);
                by_ridge.entry(ridge).or_default().push(v);
            }
        }
        let mut out = Vec::new();
        for vs in by_ridge.values() {
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    out.push((vs[i], vs[j]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Renames facet `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<CombPolytope, PolytopeError> {
        let vertices = self
            .vertices
            .iter()
            .map(|s| s.iter().map(|&f| perm[f]).collect())
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); l.len()];
            for (i, name) in l.iter().enumerate() {
                out[perm[i]] = name.clone();
            }
            out
        });
        validate_polytope(self.dim, self.facet_count, vertices, labels)
    }

    /// The simplex `Δⁿ`: facets `0..=n`, one vertex per `n`-subset.
    pub fn simplex(n: usize) -> CombPolytope {
        let vertices = (0..=n)
            .map(|skip| (0..=n).filter(|&f| f != skip).collect())
            .collect();
        validate_polytope(n, n + 1, vertices, None).expect("simplex incidence is valid")
    }

    /// True when the polytope is combinatorially a simplex.
    pub fn is_simplex(&self) -> bool {
        self.facet_count == self.dim + 1 && self.vertices.len() == self.dim + 1
    }

    pub fn from_file(file: PolytopeFile) -> Result<CombPolytope, PolytopeError> {
        validate_polytope(file.dim, file.facets, file.vertices, file.facet_labels)
    }

    pub fn to_file(&self) -> PolytopeFile {
        PolytopeFile {
            dim: self.dim,
            facets: self.facet_count,
            facet_labels: self.labels.clone(),
            vertices: self.vertices.clone(),
        }
    }

    pub fn from_json(text: &str) -> Result<CombPolytope, PolytopeError> {
        let file: PolytopeFile =
            serde_json::from_str(text).map_err(|e| PolytopeError::Json(e.to_string()))?;
        CombPolytope::from_file(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("polytope serializes")
    }

    fn check_polytopal(&self) -> Result<(), PolytopeError> {
        // Every ridge of the dual sphere (an (n-1)-subset of a vertex's
        // facets) must be an edge with exactly two endpoints.
        let mut ridge_count: HashMap<Vec<usize>, usize> = HashMap::new();
        for set in &self.vertices {
            for skip in 0..set.len() {
                let mut ridge = set.clone();
                ridge.remove(skip);
                *ridge_count.entry(ridge).or_default() += 1;
            }
        }
        if let Some((ridge, &c)) = ridge_count.iter().find(|(_, &c)| c != 2) {
            return Err(not_polytopal(format!(
                "face on facets {ridge:?} has {c} vertices instead of 2"
            )));
        }

        let edges = self.edges();
        let adj = adjacency(self.vertices.len(), &edges);
        if !connected_without(&adj, &[]) {
            return Err(not_polytopal("vertex graph is disconnected"));
        }

        let lattice = face_lattice(self);
        let expected = if (self.dim - 1).is_multiple_of(2) { 2 } else { 0 };
        if lattice.boundary_euler_characteristic() != expected {
            return Err(not_polytopal(format!(
                "boundary Euler characteristic is {}, expected {expected}",
                lattice.boundary_euler_characteristic()
            )));
        }

        if self.dim == 3 {
            self.check_steinitz(&edges, &adj)?;
        }
        Ok(())
    }

    /// Planarity and 3-connectivity of the vertex graph.
    ///
    /// Planarity is certified by the facet 2-cells: each facet bounds a
    /// single cycle, every edge lies on two facets and `V - E + F = 2`,
    /// so the cells assemble into a sphere carrying the graph.
    fn check_steinitz(
        &self,
        edges: &[(usize, usize)],
        adj: &[Vec<usize>],
    ) -> Result<(), PolytopeError> {
        for f in 0..self.facet_count {
            let on: HashSet<usize> = self.facet_vertices(f).into_iter().collect();
            let facet_edges: Vec<(usize, usize)> = edges
                .iter()
                .copied()
                .filter(|(a, b)| on.contains(a) && on.contains(b) && self.edge_lies_on(*a, *b, f))
                .collect();
            if facet_edges.len() != on.len() || on.len() < 3 {
                return Err(not_polytopal(format!("facet {f} is not a polygon")));
            }
            let mut local: HashMap<usize, Vec<usize>> = HashMap::new();
            for &(a, b) in &facet_edges {
                local.entry(a).or_default().push(b);
                local.entry(b).or_default().push(a);
            }
            if local.values().any(|n| n.len() != 2) {
                return Err(not_polytopal(format!("facet {f} is not a polygon")));
            }
            let start = *on.iter().next().expect("facet is nonempty");
            let mut seen = HashSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &local[&u] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            if seen.len() != on.len() {
                return Err(not_polytopal(format!("facet {f} boundary is not one cycle")));
            }
        }
        let euler = self.vertices.len() as i64 - edges.len() as i64 + self.facet_count as i64;
        if euler != 2 {
            return Err(not_polytopal(format!("V - E + F = {euler}, graph is not planar")));
        }
        let n = self.vertices.len();
        for a in 0..n {
            for b in a + 1..n {
                if !connected_without(adj, &[a, b]) {
                    return Err(not_polytopal(format!(
                        "removing vertices {a} and {b} disconnects the graph"
                    )));
                }
            }
        }
        Ok(())
    }

    fn edge_lies_on(&self, a: usize, b: usize, f: usize) -> bool {
        self.vertices[a].binary_search(&f).is_ok() && self.vertices[b].binary_search(&f).is_ok()
    }
}

pub(crate) fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn connected_without(adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let n = adj.len();
    let Some(start) = (0..n).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut reached = 1;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached + removed.len() == n
}
