use std::collections::{BTreeMap, HashSet};

use super::CombPolytope;

/// Searches for a facet bijection `perm` (facet `i` of `p` ↦ facet
/// `perm[i]` of `q`) that carries the vertex sets of `p` onto those of `q`.
///
/// Colour refinement on facets prunes candidates; backtracking completes
/// the assignment. Any returned bijection has been re-checked against the
/// full incidence.
pub fn combinatorial_isomorphic(p: &CombPolytope, q: &CombPolytope) -> Option<Vec<usize>> {
    if p.dim() != q.dim()
        || p.facet_count() != q.facet_count()
        || p.vertex_count() != q.vertex_count()
    {
        return None;
    }
    let sp = shared_counts(p);
    let sq = shared_counts(q);
    let (cp, cq) = refine(&sp, &sq);
    let mut hp = cp.clone();
    let mut hq = cq.clone();
    hp.sort_unstable();
    hq.sort_unstable();
    if hp != hq {
        return None;
    }

    let order = search_order(&sp, &cp);
    let target: HashSet<&[usize]> = q.vertices().iter().map(Vec::as_slice).collect();
    let mut search = Search {
        p,
        sp: &sp,
        sq: &sq,
        cp: &cp,
        cq: &cq,
        order: &order,
        target: &target,
        perm: vec![usize::MAX; p.facet_count()],
        used: vec![false; q.facet_count()],
    };
    if search.extend(0) {
        Some(search.perm)
    } else {
        None
    }
}

/// `shared[a][b]` = number of vertices on both facets (`shared[a][a]` is
/// the facet's own vertex count).
fn shared_counts(p: &CombPolytope) -> Vec<Vec<usize>> {
    let m = p.facet_count();
    let mut s = vec![vec![0; m]; m];
    for set in p.vertices() {
        for &a in set {
            for &b in set {
                s[a][b] += 1;
            }
        }
    }
    s
}

fn refine(sp: &[Vec<usize>], sq: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut cp: Vec<usize> = (0..sp.len()).map(|a| sp[a][a]).collect();
    let mut cq: Vec<usize> = (0..sq.len()).map(|a| sq[a][a]).collect();
    let mut classes = 0;
    loop {
        let sig = |s: &[Vec<usize>], c: &[usize], a: usize| {
            let mut nb: Vec<(usize, usize)> = (0..s.len())
                .filter(|&b| b != a && s[a][b] > 0)
                .map(|b| (c[b], s[a][b]))
                .collect();
            nb.sort_unstable();
            (c[a], nb)
        };
        let sig_p: Vec<_> = (0..sp.len()).map(|a| sig(sp, &cp, a)).collect();
        let sig_q: Vec<_> = (0..sq.len()).map(|a| sig(sq, &cq, a)).collect();
        let mut ids = BTreeMap::new();
        for s in sig_p.iter().chain(sig_q.iter()) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        cp = sig_p.iter().map(|s| ids[s]).collect();
        cq = sig_q.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (cp, cq);
        }
        classes = ids.len();
    }
}

/// Rarest colour first, then greedily the facet most connected to those
/// already placed.
fn search_order(sp: &[Vec<usize>], cp: &[usize]) -> Vec<usize> {
    let m = sp.len();
    let mut freq = BTreeMap::new();
    for &c in cp {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .filter(|&a| !placed[a])
            .max_by_key(|&a| {
                let links = order.iter().filter(|&&b: &&usize| sp[a][b] > 0).count();
                (links, std::cmp::Reverse(freq[&cp[a]]), std::cmp::Reverse(a))
            })
            .expect("unplaced facet exists");
        placed[next] = true;
        order.push(next);
    }
    order
}

struct Search<'a> {
    p: &'a CombPolytope,
    sp: &'a [Vec<usize>],
    sq: &'a [Vec<usize>],
    cp: &'a [usize],
    cq: &'a [usize],
    order: &'a [usize],
    target: &'a HashSet<&'a [usize]>,
    perm: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.verify();
        }
        let a = self.order[depth];
        for b in 0..self.used.len() {
            if self.used[b] || self.cp[a] != self.cq[b] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&x| self.sp[a][x] == self.sq[b][self.perm[x]]);
            if !consistent {
                continue;
            }
            self.perm[a] = b;
            self.used[b] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[b] = false;
            self.perm[a] = usize::MAX;
        }
        false
    }

    fn verify(&self) -> bool {
        self.p.vertices().iter().all(|set| {
            let mut image: Vec<usize> = set.iter().map(|&f| self.perm[f]).collect();
            image.sort_unstable();
            self.target.contains(image.as_slice())
        })
    }
}
