use crate::polytope::{facet_graph, validate_polytope, CombPolytope};

use super::MoveError;

/// Truncates vertex `v`.
///
/// The new facet takes index `m`. Each of the `n` new vertices lies on it
/// and on all but one of the facets through `v`.
pub fn vertex_cut(p: &CombPolytope, v: usize) -> Result<CombPolytope, MoveError> {
    let cut = p.vertex(v).ok_or(MoveError::NoSuchVertex(v))?.to_vec();
    let new_facet = p.facet_count();
    let mut vertices: Vec<Vec<usize>> = Vec::with_capacity(p.vertex_count() + p.dim() - 1);
    vertices.extend(
        p.vertices()
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, s)| s.clone()),
    );
    for skip in 0..cut.len() {
        let mut s = cut.clone();
        s.remove(skip);
        s.push(new_facet);
        vertices.push(s);
    }
    Ok(validate_polytope(
        p.dim(),
        p.facet_count() + 1,
        vertices,
        p.labels().map(|l| {
            let mut l = l.to_vec();
            l.push(format!("cut{new_facet}"));
            l
        }),
    )?)
}

/// The facets of `p` adjacent to `f`, when `f` is a combinatorial simplex
/// whose dual vertex has degree `n`.
pub(crate) fn simplex_facet_neighbors(p: &CombPolytope, f: usize) -> Option<Vec<usize>> {
    if f >= p.facet_count() || p.facet_vertices(f).len() != p.dim() {
        return None;
    }
    let g = facet_graph(p);
    let nb = g.neighbors(f).to_vec();
    (nb.len() == p.dim()).then_some(nb)
}

/// Whether facet `f` can be shrunk to a vertex.
pub fn collapse_admissible(p: &CombPolytope, f: usize) -> bool {
    !p.is_simplex()
        && simplex_facet_neighbors(p, f)
            .map(|nb| p.find_vertex(&nb).is_none())
            .unwrap_or(false)
}

/// Undoes a vertex-cut: the simplex facet `f` is removed and its `n`
/// vertices merge into one vertex on the `n` facets adjacent to `f`.
///
/// Facets above `f` shift down by one index.
pub fn simplex_facet_collapse(p: &CombPolytope, f: usize) -> Result<CombPolytope, MoveError> {
    if f >= p.facet_count() {
        return Err(MoveError::NoSuchFacet(f));
    }
    if p.is_simplex() {
        return Err(MoveError::IsSimplex);
    }
    let neighbors = simplex_facet_neighbors(p, f).ok_or(MoveError::NotSimplexFacet(f))?;
    if p.find_vertex(&neighbors).is_some() {
        return Err(MoveError::CollapseInadmissible(f));
    }
    let shift = |g: usize| if g > f { g - 1 } else { g };
    let mut vertices: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .filter(|s| s.binary_search(&f).is_err())
        .map(|s| s.iter().map(|&g| shift(g)).collect())
        .collect();
    vertices.push(neighbors.iter().map(|&g| shift(g)).collect());
    let labels = p.labels().map(|l| {
        l.iter()
            .enumerate()
            .filter(|&(i, _)| i != f)
            .map(|(_, s)| s.clone())
            .collect()
    });
    Ok(validate_polytope(
        p.dim(),
        p.facet_count() - 1,
        vertices,
        labels,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polytope::{combinatorial_isomorphic, face_lattice};

    #[test]
    fn cutting_simplex_gives_prism() {
        for v in 0..4 {
            let p = vertex_cut(&CombPolytope::simplex(3), v).unwrap();
            assert!(combinatorial_isomorphic(&p, &corpus::prism(3)).is_some());
        }
    }

    #[test]
    fn cutting_prism_vertex() {
        let p = vertex_cut(&corpus::prism(3), 0).unwrap();
        assert_eq!((p.facet_count(), p.vertex_count()), (6, 8));
    }

    #[test]
    fn cutting_cube_vertex_leaves_one_triangle() {
        let p = vertex_cut(&corpus::cube(3), 0).unwrap();
        assert_eq!((p.facet_count(), p.vertex_count()), (7, 10));
        let triangles = (0..7).filter(|&f| p.facet_vertices(f).len() == 3).count();
        assert_eq!(triangles, 1);
        assert_eq!(face_lattice(&p).f_vector(), vec![10, 15, 7, 1]);
    }

    #[test]
    fn collapse_prism_triangle_gives_simplex() {
        let p = corpus::prism(3);
        let q = simplex_facet_collapse(&p, 3).unwrap();
        assert!(q.is_simplex());
    }

    #[test]
    fn cube_has_no_simplex_facet() {
        let c = corpus::cube(3);
        for f in 0..6 {
            assert_eq!(simplex_facet_collapse(&c, f), Err(MoveError::NotSimplexFacet(f)));
        }
    }

    #[test]
    fn cut_cube_collapses_back_to_cube() {
        let p = vertex_cut(&corpus::cube(3), 5).unwrap();
        let back = simplex_facet_collapse(&p, 6).unwrap();
        assert!(combinatorial_isomorphic(&back, &corpus::cube(3)).is_some());
    }

    #[test]
    fn simplex_refuses_collapse() {
        assert_eq!(
            simplex_facet_collapse(&CombPolytope::simplex(3), 0),
            Err(MoveError::IsSimplex)
        );
    }

    #[test]
    fn admissibility_on_prism() {
        let p = corpus::prism(3);
        assert!(collapse_admissible(&p, 3));
        assert!(collapse_admissible(&p, 4));
        assert!(!collapse_admissible(&p, 0));
    }

    #[test]
    fn no_such_vertex() {
        assert_eq!(
            vertex_cut(&CombPolytope::simplex(3), 7),
            Err(MoveError::NoSuchVertex(7))
        );
    }
}
