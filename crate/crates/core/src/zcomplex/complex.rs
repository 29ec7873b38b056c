use serde::Serialize;

use crate::polytope::{face_lattice, CombPolytope, FaceLattice};

use super::group::{subgroup_mask, GroupElement};
use super::union_find::UnionFind;
use super::ComplexError;

pub const DEFAULT_FACET_GUARD: usize = 20;

/// The cell complex `P × (Z₂)^m / ∼` where `(p, g) ∼ (p, g')` iff
/// `g + g'` lies in the subgroup `G_f` generated by the facets through the
/// face `f` carrying `p`.
///
/// There is one cell per pair (face, coset of `G_f`). A coset is named by
/// its least element, which is `g` with the bits of `G_f` cleared.
#[derive(Debug, Clone)]
pub struct ChamberComplex {
    base: CombPolytope,
    lattice: FaceLattice,
    masks: Vec<u32>,
    /// Cells over face `f` are `start[f]..start[f + 1]`.
    start: Vec<usize>,
    reps: Vec<u32>,
    cell_face: Vec<usize>,
}

/// A cell: a face of `P` and the least element of its coset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub face: usize,
    pub rep: GroupElement,
}

pub fn build_chamber_complex(p: &CombPolytope) -> Result<ChamberComplex, ComplexError> {
    build_chamber_complex_with(p, DEFAULT_FACET_GUARD)
}

/// Glues the `2^m` chambers face by face with a union-find over the group.
pub fn build_chamber_complex_with(
    p: &CombPolytope,
    guard: usize,
) -> Result<ChamberComplex, ComplexError> {
    let m = p.facet_count();
    if m > guard || m > 30 {
        return Err(ComplexError::GuardExceeded { m, guard });
    }
    let lattice = face_lattice(p);
    let size = 1usize << m;
    let mut masks = Vec::with_capacity(lattice.len());
    let mut start = vec![0];
    let mut reps = Vec::new();
    let mut cell_face = Vec::new();
    let mut uf_roots = vec![usize::MAX; size];
    for (fi, face) in lattice.faces().iter().enumerate() {
        let mask = subgroup_mask(&face.facets);
        masks.push(mask);
        let mut uf = UnionFind::new(size);
        for g in 0..size {
            for &i in &face.facets {
                let h = g ^ (1 << i);
                if g < h {
                    uf.union(g, h);
                }
            }
        }
        uf_roots.iter_mut().for_each(|r| *r = usize::MAX);
        for g in 0..size {
            let root = uf.find(g);
            if uf_roots[root] == usize::MAX {
                // first (least) element of its class
                uf_roots[root] = g;
                reps.push(g as u32);
                cell_face.push(fi);
            }
        }
        let expected = size >> face.facets.len();
        debug_assert_eq!(uf.set_count(), expected);
        start.push(reps.len());
    }
    Ok(ChamberComplex {
        base: p.clone(),
        lattice,
        masks,
        start,
        reps,
        cell_face,
    })
}

impl ChamberComplex {
    pub fn base(&self) -> &CombPolytope {
        &self.base
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// Number of facets `m` (rank of the acting group).
    pub fn m(&self) -> usize {
        self.base.facet_count()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn cell_count(&self) -> usize {
        self.reps.len()
    }

    pub fn cell(&self, id: usize) -> Cell {
        Cell {
            face: self.cell_face[id],
            rep: GroupElement(self.reps[id]),
        }
    }

    pub fn cell_dim(&self, id: usize) -> usize {
        self.lattice.face(self.cell_face[id]).dim
    }

    /// Generator mask of `G_f`.
    pub fn face_mask(&self, face: usize) -> u32 {
        self.masks[face]
    }

    /// Ids of the cells lying over `face`.
    pub fn cells_over(&self, face: usize) -> std::ops::Range<usize> {
        self.start[face]..self.start[face + 1]
    }

    /// The cell containing `η(p, g)` for `p` in the relative interior of
    /// `face`.
    pub fn cell_id(&self, face: usize, g: GroupElement) -> usize {
        let rep = g.bits() & !self.masks[face];
        let range = self.cells_over(face);
        let offset = self.reps[range.clone()]
            .binary_search(&rep)
            .expect("canonical coset representative is present");
        range.start + offset
    }

    /// The chamber `η(P × {g})`.
    pub fn chamber(&self, g: GroupElement) -> usize {
        self.cell_id(self.lattice.top(), g)
    }

    pub fn chamber_count(&self) -> usize {
        self.cells_over(self.lattice.top()).len()
    }

    /// The canonical action `g' · [(p, g)] = [(p, g' + g)]`.
    pub fn act(&self, g: GroupElement, id: usize) -> usize {
        let c = self.cell(id);
        self.cell_id(c.face, c.rep + g)
    }

    /// Cells one dimension lower contained in `id`.
    pub fn boundary(&self, id: usize) -> Vec<usize> {
        let c = self.cell(id);
        let face = self.lattice.face(c.face);
        let mut out = Vec::new();
        for &(sup, sub) in self.lattice.covers() {
            if sup == c.face {
                out.push(self.cell_id(sub, c.rep));
            }
        }
        debug_assert!(out.len() <= self.base.facet_count() - face.facets.len());
        out
    }

    /// Cells one dimension higher containing `id`: two across each facet
    /// through the face.
    pub fn coboundary(&self, id: usize) -> Vec<usize> {
        let c = self.cell(id);
        let face = self.lattice.face(c.face);
        let mut out = Vec::with_capacity(2 * face.facets.len());
        for (k, &s) in face.facets.iter().enumerate() {
            let mut sup = face.facets.clone();
            sup.remove(k);
            let sup = self.lattice.find(&sup).expect("sub-multiset of a face is a face");
            out.push(self.cell_id(sup, c.rep));
            out.push(self.cell_id(sup, c.rep + GroupElement::generator(s)));
        }
        out
    }

    /// Cell counts indexed by dimension.
    pub fn cells_by_dim(&self) -> Vec<usize> {
        let mut out = vec![0; self.dim() + 1];
        for f in 0..self.lattice.len() {
            out[self.lattice.face(f).dim] += self.cells_over(f).len();
        }
        out
    }
}

/// Alternating sum of the cell counts.
pub fn euler_characteristic(z: &ChamberComplex) -> i64 {
    z.cells_by_dim()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// `Σ_f (-1)^{dim f} 2^{m - codim f}` over the face lattice, without
/// building any cells.
pub fn euler_characteristic_closed_form(p: &CombPolytope) -> i128 {
    let m = p.facet_count() as u32;
    face_lattice(p)
        .faces()
        .iter()
        .map(|f| {
            let count = 1i128 << (m - f.facets.len() as u32);
            if f.dim % 2 == 0 {
                count
            } else {
                -count
            }
        })
        .sum()
}

/// Components of the chamber adjacency graph (chambers `g`, `g + e_i`
/// share the cell over `F_i`).
pub fn connected_components(z: &ChamberComplex) -> usize {
    let mut uf = UnionFind::new(z.chamber_count());
    let top = z.lattice().top();
    for f in 0..z.lattice().len() {
        if z.lattice().face(f).facets.len() != 1 {
            continue;
        }
        for id in z.cells_over(f) {
            let chambers: Vec<usize> = z
                .coboundary(id)
                .into_iter()
                .map(|c| c - z.cells_over(top).start)
                .collect();
            for w in chambers.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    uf.set_count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedSet {
    pub facet: usize,
    pub components: usize,
    /// Cell ids of each component.
    pub cells: Vec<Vec<usize>>,
}

/// The fixed set of `e_i`: every cell over a face inside `F_i`, split into
/// components by union-find over the boundary relation.
pub fn fixed_point_components(z: &ChamberComplex, i: usize) -> Result<FixedSet, ComplexError> {
    if i >= z.m() {
        return Err(ComplexError::NoSuchFacet(i));
    }
    let members: Vec<usize> = (0..z.cell_count())
        .filter(|&id| z.face_mask(z.cell(id).face) >> i & 1 == 1)
        .collect();
    let index: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let mut uf = UnionFind::new(members.len());
    for (k, &id) in members.iter().enumerate() {
        for b in z.boundary(id) {
            let j = index[&b];
            uf.union(k, j);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (k, &id) in members.iter().enumerate() {
        groups.entry(uf.find(k)).or_default().push(id);
    }
    let mut cells: Vec<Vec<usize>> = groups.into_values().collect();
    cells.sort();
    Ok(FixedSet {
        facet: i,
        components: cells.len(),
        cells,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub orientable: bool,
    /// `signs[g]` for chamber `g`.
    pub signs: Vec<i8>,
}

/// Gives chamber `g` the sign `(-1)^{|g|}` and checks that the two
/// chambers on either side of every codimension-one cell disagree.
pub fn orientability(z: &ChamberComplex) -> Orientation {
    let top = z.cells_over(z.lattice().top()).start;
    let signs: Vec<i8> = (0..z.chamber_count())
        .map(|g| if (g as u32).count_ones().is_multiple_of(2) { 1 } else { -1 })
        .collect();
    let mut orientable = true;
    for f in 0..z.lattice().len() {
        if z.lattice().face(f).facets.len() != 1 {
            continue;
        }
        for id in z.cells_over(f) {
            let sides = z.coboundary(id);
            if sides.len() != 2 || signs[sides[0] - top] == signs[sides[1] - top] {
                orientable = false;
            }
        }
    }
    Orientation { orientable, signs }
}
