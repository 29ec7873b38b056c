//! Standard polytopes and seeded random vertex-cut instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hrep::HRep;
use crate::moves::vertex_cut;
use crate::polytope::{validate_polytope, CombPolytope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// Polytope families the generator knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Simplex { dim: usize },
    Cube { dim: usize },
    Prism { sides: usize },
    RandomVertexCuts { cuts: usize, seed: u64 },
    Dodecahedron,
}

pub fn generate(kind: Kind) -> Result<CombPolytope, CorpusError> {
    match kind {
        Kind::Simplex { dim } if dim >= 1 => Ok(CombPolytope::simplex(dim)),
        Kind::Cube { dim } if dim >= 1 => Ok(cube(dim)),
        Kind::Prism { sides } if sides >= 3 => Ok(prism(sides)),
        Kind::RandomVertexCuts { cuts, seed } => Ok(random_vertex_cuts(cuts, seed)),
        Kind::Dodecahedron => Ok(dodecahedron()),
        other => Err(CorpusError::BadParameters(format!("{other:?}"))),
    }
}

/// The `n`-cube: facet `i` is `x_i = 0`, facet `i + n` is `x_i = 1`.
pub fn cube(n: usize) -> CombPolytope {
    let vertices = (0..1usize << n)
        .map(|bits| {
            (0..n)
                .map(|i| if bits >> i & 1 == 0 { i } else { i + n })
                .collect::<Vec<_>>()
        })
        .collect();
    validate_polytope(n, 2 * n, vertices, None).expect("cube incidence is valid")
}

/// The `k`-gonal prism: side facets `0..k`, bottom `k`, top `k + 1`.
pub fn prism(k: usize) -> CombPolytope {
    let mut vertices = Vec::with_capacity(2 * k);
    for cap in [k, k + 1] {
        for i in 0..k {
            let mut s = vec![i, (i + 1) % k, cap];
            s.sort_unstable();
            vertices.push(s);
        }
    }
    validate_polytope(3, k + 2, vertices, None).expect("prism incidence is valid")
}

/// The dodecahedron as the dual of the icosahedron: twelve facets, one
/// vertex per icosahedral triangle.
pub fn dodecahedron() -> CombPolytope {
    // icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut triangles = Vec::with_capacity(20);
    for i in 0..5 {
        triangles.push(vec![0, up(i), up(i + 1)]);
        triangles.push(vec![up(i), up(i + 1), low(i)]);
        triangles.push(vec![low(i), low(i + 1), up(i + 1)]);
        triangles.push(vec![11, low(i), low(i + 1)]);
    }
    validate_polytope(3, 12, triangles, None).expect("dodecahedron incidence is valid")
}

/// Applies `cuts` vertex-cuts to Δ³, each at a uniformly chosen vertex of
/// the current polytope.
pub fn random_vertex_cuts(cuts: usize, seed: u64) -> CombPolytope {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = CombPolytope::simplex(3);
    for _ in 0..cuts {
        let v = rng.gen_range(0..p.vertex_count());
        p = vertex_cut(&p, v).expect("vertex index is in range");
    }
    p
}

/// H-representations matching the facet numbering of [`CombPolytope::simplex`],
/// [`cube`] and [`prism`]`(3)`.
pub fn simplex_hrep(n: usize) -> HRep {
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut a = vec![0.0; n];
        a[i] = 1.0;
        rows.push((a, 0.0));
    }
    rows.push((vec![-1.0; n], 1.0));
    HRep::from_rows(n, &rows).expect("simplex presentation is valid")
}

pub fn cube_hrep(n: usize) -> HRep {
    let mut rows = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut a = vec![0.0; n];
        a[i] = 1.0;
        rows.push((a, 0.0));
    }
    for i in 0..n {
        let mut a = vec![0.0; n];
        a[i] = -1.0;
        rows.push((a, 1.0));
    }
    HRep::from_rows(n, &rows).expect("cube presentation is valid")
}

/// `Δ² × [0,1]`: sides `x ≥ 0`, `y ≥ 0`, `1 - x - y ≥ 0`, bottom `z ≥ 0`,
/// top `1 - z ≥ 0`.
pub fn prism_hrep() -> HRep {
    let rows = vec![
        (vec![1.0, 0.0, 0.0], 0.0),
        (vec![0.0, 1.0, 0.0], 0.0),
        (vec![-1.0, -1.0, 0.0], 1.0),
        (vec![0.0, 0.0, 1.0], 0.0),
        (vec![0.0, 0.0, -1.0], 1.0),
    ];
    HRep::from_rows(3, &rows).expect("prism presentation is valid")
}
