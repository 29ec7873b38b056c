//! Independent oracles shared by the integration tests. Nothing here calls
//! the move or recognition code under test.
#![allow(dead_code)]

use std::collections::HashMap;

use rzpoly::hrep::{linalg, HRep};
use rzpoly::polytope::{combinatorial_isomorphic, validate_polytope};
use rzpoly::CombPolytope;

/// Truncates vertex `v` of a simple 3-polytope; the new facet is last.
pub fn cut_vertex(p: &CombPolytope, v: usize) -> CombPolytope {
    let m = p.facet_count();
    let s = &p.vertices()[v];
    let mut verts: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, w)| w.clone())
        .collect();
    for skip in 0..s.len() {
        let mut w: Vec<usize> = s.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, f)| f).collect();
        w.push(m);
        verts.push(w);
    }
    validate_polytope(p.dim(), m + 1, verts, None).expect("vertex cut stays simple")
}

/// Truncates the edge joining vertices `{a,b,c}` and `{a,b,d}`.
pub fn cut_edge(p: &CombPolytope, u: usize, w: usize) -> CombPolytope {
    let m = p.facet_count();
    let (su, sw) = (&p.vertices()[u], &p.vertices()[w]);
    let common: Vec<usize> = su.iter().copied().filter(|f| sw.contains(f)).collect();
    assert_eq!(common.len(), 2, "not an edge");
    let c = *su.iter().find(|f| !common.contains(f)).unwrap();
    let d = *sw.iter().find(|f| !common.contains(f)).unwrap();
    let mut verts: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != u && i != w)
        .map(|(_, s)| s.clone())
        .collect();
    for &x in &common {
        for &y in &[c, d] {
            verts.push(vec![x, y, m]);
        }
    }
    validate_polytope(3, m + 1, verts, None).expect("edge cut stays simple")
}

/// Pairs of vertices sharing two facets.
pub fn edges(p: &CombPolytope) -> Vec<(usize, usize)> {
    let v = p.vertices();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i].iter().filter(|f| v[j].contains(f)).count() == p.dim() - 1 {
                out.push((i, j));
            }
        }
    }
    out
}

fn bucket_key(p: &CombPolytope) -> (usize, usize, Vec<usize>) {
    let mut sizes: Vec<usize> = (0..p.facet_count())
        .map(|f| p.vertices().iter().filter(|s| s.contains(&f)).count())
        .collect();
    sizes.sort_unstable();
    (p.facet_count(), p.vertex_count(), sizes)
}

/// Every simple 3-polytope with at most `max_facets` facets reachable from
/// Δ³ by vertex- and edge-cuts, one per isomorphism class.
pub fn small_simple_polytopes(max_facets: usize) -> Vec<CombPolytope> {
    let mut classes: HashMap<(usize, usize, Vec<usize>), Vec<CombPolytope>> = HashMap::new();
    let mut all = vec![CombPolytope::simplex(3)];
    classes.entry(bucket_key(&all[0])).or_default().push(all[0].clone());
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            if p.facet_count() >= max_facets {
                continue;
            }
            let children = (0..p.vertex_count())
                .map(|v| cut_vertex(p, v))
                .chain(edges(p).into_iter().map(|(u, w)| cut_edge(p, u, w)));
            for q in children {
                let bucket = classes.entry(bucket_key(&q)).or_default();
                if bucket.iter().any(|r| combinatorial_isomorphic(r, &q).is_some()) {
                    continue;
                }
                bucket.push(q.clone());
                next.push(q);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Every polytope reachable by shrinking one triangle whose three
/// neighbours do not already meet in a vertex.
fn collapses(p: &CombPolytope) -> Vec<CombPolytope> {
    let m = p.facet_count();
    let mut out = Vec::new();
    for f in 0..m {
        let on: Vec<&Vec<usize>> = p.vertices().iter().filter(|s| s.contains(&f)).collect();
        if on.len() != 3 {
            continue;
        }
        let mut nbrs: Vec<usize> = on.iter().flat_map(|s| s.iter().copied()).filter(|&g| g != f).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        if nbrs.len() != 3 || p.vertices().contains(&nbrs) {
            continue;
        }
        let shift = |g: usize| if g > f { g - 1 } else { g };
        let mut verts: Vec<Vec<usize>> = p
            .vertices()
            .iter()
            .filter(|s| !s.contains(&f))
            .map(|s| s.iter().map(|&g| shift(g)).collect())
            .collect();
        verts.push(nbrs.iter().map(|&g| shift(g)).collect());
        if let Ok(q) = validate_polytope(3, m - 1, verts, None) {
            out.push(q);
        }
    }
    out
}

/// Tries every order of triangle collapses.
pub fn exhaustive_reducible(p: &CombPolytope) -> bool {
    if p.facet_count() == 4 {
        return true;
    }
    collapses(p).iter().any(exhaustive_reducible)
}

/// Cuts vertex `v` of a geometric polytope by the hyperplane through the
/// points `v + t (w − v)` for the neighbours `w`.
pub fn geometric_vertex_cut(h: &HRep, v: usize, t: f64) -> HRep {
    let n = h.dim();
    let verts = h.vertices();
    let here = &verts[v];
    let nbrs: Vec<&[f64]> = verts
        .iter()
        .filter(|w| w.tight.iter().filter(|f| here.tight.contains(f)).count() == n - 1)
        .map(|w| w.point.as_slice())
        .collect();
    assert_eq!(nbrs.len(), n);
    let e: Vec<Vec<f64>> = nbrs
        .iter()
        .map(|w| w.iter().zip(&here.point).map(|(a, b)| a - b).collect())
        .collect();
    // a with <a, w_i - v> = 1 for every neighbour
    let a = linalg::solve(&e, &vec![1.0; n], 1e-12).expect("simple vertex");
    let b = -linalg::dot(&a, &here.point) - t;
    let mut rows: Vec<(Vec<f64>, f64)> = h
        .normals()
        .iter()
        .cloned()
        .zip(h.offsets().iter().copied())
        .collect();
    rows.push((a, b));
    HRep::from_rows(n, &rows).expect("cut polytope is valid")
}

/// Polygon with `k` edges; vertex `i` lies on edges `i` and `i+1`.
pub fn polygon(k: usize) -> CombPolytope {
    let verts = (0..k)
        .map(|i| {
            let mut s = vec![i, (i + 1) % k];
            s.sort_unstable();
            s
        })
        .collect();
    validate_polytope(2, k, verts, None).unwrap()
}
