use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::polytope::{
    combinatorial_isomorphic, dual_sphere, CombPolytope, SimplicialSphere,
};

use super::MoveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FlipKind {
    /// Flip at a vertex of the polytope (a vertex-cut).
    Vertex,
    /// Flip at a higher-dimensional simplex face.
    General,
}

/// A flip of a simple polytope at the face cut out by `face` (a set of
/// facet indices, equivalently a face of the dual sphere).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipMove {
    pub kind: FlipKind,
    pub face: Vec<usize>,
    #[serde(default)]
    pub codim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipCertificateJson {
    pub moves: Vec<FlipMove>,
}

/// Replaces the star of `face` by the complementary configuration.
///
/// The link of `face` must be the boundary of a simplex `τ` that is not
/// already a face. If `face` is a facet, `τ` is a new vertex numbered
/// `vertex_count`; if `face` is a single vertex, that vertex disappears
/// and higher labels shift down by one.
pub fn bistellar_flip(
    k: &SimplicialSphere,
    face: &[usize],
) -> Result<SimplicialSphere, MoveError> {
    let mut sigma = face.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    let n = k.dim() + 1;
    let star = k.star(&sigma);
    if sigma.is_empty() || star.is_empty() {
        return Err(MoveError::NotAFace(sigma));
    }

    let tau: Vec<usize> = if sigma.len() == n {
        vec![k.vertex_count()]
    } else {
        let mut t: Vec<usize> = star
            .iter()
            .flat_map(|f| f.iter().copied().filter(|v| sigma.binary_search(v).is_err()))
            .collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    if tau.len() != n + 1 - sigma.len() || star.len() != tau.len() {
        return Err(MoveError::LinkNotStandard(sigma));
    }
    if tau.len() > 1 && k.contains_face(&tau) {
        return Err(MoveError::LinkNotStandard(sigma));
    }

    let mut facets: Vec<Vec<usize>> = k
        .facets()
        .iter()
        .filter(|f| !sigma.iter().all(|v| f.binary_search(v).is_ok()))
        .cloned()
        .collect();
    for &drop in &sigma {
        let mut f: Vec<usize> = sigma.iter().copied().filter(|&v| v != drop).collect();
        f.extend(&tau);
        facets.push(f);
    }

    let mut vertex_count = k.vertex_count();
    if tau.len() == 1 && sigma.len() == n {
        vertex_count += 1;
    }
    if sigma.len() == 1 {
        let gone = sigma[0];
        for f in &mut facets {
            for v in f.iter_mut() {
                if *v > gone {
                    *v -= 1;
                }
            }
        }
        vertex_count -= 1;
    }
    SimplicialSphere::new(vertex_count, facets)
        .map_err(|e| MoveError::FlipBroke(e.to_string()))
}

/// Dimension of the polytope dual to `k`.
fn polytope_dim(k: &SimplicialSphere) -> usize {
    k.dim() + 1
}

fn flip_move(k: &SimplicialSphere, face: Vec<usize>) -> FlipMove {
    let n = polytope_dim(k);
    FlipMove {
        kind: if face.len() == n {
            FlipKind::Vertex
        } else {
            FlipKind::General
        },
        codim: face.len(),
        face,
    }
}

/// Result of the flip-certificate search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlipSearch {
    /// Moves from `∂Δⁿ` to the dual sphere of the target.
    Certificate(Vec<FlipMove>),
    /// Nothing found up to the depth bound. Not a proof of impossibility.
    NoneWithinBound { depth: usize, states: usize },
}

/// Breadth-first search for a sequence of flips at faces of codimension at
/// least three leading from the simplex to `p`.
///
/// States are deduplicated up to combinatorial isomorphism. Flips of
/// codimension ≥ 3 never remove a dual vertex, so states with more facets
/// than `p` are dropped.
pub fn psc_flip_certificate(
    p: &CombPolytope,
    depth: usize,
    state_cap: usize,
) -> Result<FlipSearch, MoveError> {
    let n = p.dim();
    if p.is_simplex() {
        return Ok(FlipSearch::Certificate(Vec::new()));
    }
    let root = dual_sphere(&CombPolytope::simplex(n));
    let mut nodes: Vec<(SimplicialSphere, Option<(usize, FlipMove)>)> = vec![(root, None)];
    let mut seen: HashMap<Key, Vec<CombPolytope>> = HashMap::new();
    let root_poly = CombPolytope::simplex(n);
    seen.entry(key(&root_poly)).or_default().push(root_poly);
    let target_key = key(p);

    let mut frontier = vec![0usize];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &idx in &frontier {
            let sphere = nodes[idx].0.clone();
            for face in candidate_faces(&sphere) {
                let Ok(child) = bistellar_flip(&sphere, &face) else {
                    continue;
                };
                if child.vertex_count() > p.facet_count() {
                    continue;
                }
                let poly = child.to_polytope()?;
                let k = key(&poly);
                let bucket = seen.entry(k.clone()).or_default();
                if bucket
                    .iter()
                    .any(|q| combinatorial_isomorphic(q, &poly).is_some())
                {
                    continue;
                }
                bucket.push(poly.clone());
                let mv = flip_move(&sphere, face);
                nodes.push((child, Some((idx, mv))));
                if nodes.len() > state_cap {
                    return Err(MoveError::GuardExceeded(state_cap));
                }
                let child_idx = nodes.len() - 1;
                if k == target_key && combinatorial_isomorphic(&poly, p).is_some() {
                    return Ok(FlipSearch::Certificate(path_to(&nodes, child_idx)));
                }
                next.push(child_idx);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(FlipSearch::NoneWithinBound {
        depth,
        states: nodes.len(),
    })
}

/// Replays a certificate from `∂Δⁿ` and checks it lands on `p`.
pub fn verify_flip_certificate(p: &CombPolytope, moves: &[FlipMove]) -> Result<bool, MoveError> {
    let mut sphere = dual_sphere(&CombPolytope::simplex(p.dim()));
    for mv in moves {
        if mv.face.len() < 3 {
            return Ok(false);
        }
        sphere = bistellar_flip(&sphere, &mv.face)?;
    }
    Ok(combinatorial_isomorphic(&sphere.to_polytope()?, p).is_some())
}

fn path_to(nodes: &[(SimplicialSphere, Option<(usize, FlipMove)>)], mut idx: usize) -> Vec<FlipMove> {
    let mut moves = Vec::new();
    while let Some((parent, mv)) = &nodes[idx].1 {
        moves.push(mv.clone());
        idx = *parent;
    }
    moves.reverse();
    moves
}

/// Faces with at least three vertices.
fn candidate_faces(k: &SimplicialSphere) -> Vec<Vec<usize>> {
    let mut faces = std::collections::BTreeSet::new();
    for f in k.facets() {
        let size = f.len();
        for mask in 0u32..(1 << size) {
            if mask.count_ones() >= 3 {
                faces.insert(
                    (0..size)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| f[i])
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    faces.into_iter().collect()
}

type Key = (usize, usize, Vec<usize>);

fn key(p: &CombPolytope) -> Key {
    let mut sizes: Vec<usize> = (0..p.facet_count())
        .map(|f| p.facet_vertices(f).len())
        .collect();
    sizes.sort_unstable();
    (p.facet_count(), p.vertex_count(), sizes)
}

impl FlipSearch {
    pub fn to_json(&self) -> Option<FlipCertificateJson> {
        match self {
            FlipSearch::Certificate(moves) => Some(FlipCertificateJson {
                moves: moves.clone(),
            }),
            FlipSearch::NoneWithinBound { .. } => None,
        }
    }
}
