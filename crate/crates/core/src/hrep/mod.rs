//! Half-space presentations `P(A, b) = { x : ⟨a_i, x⟩ + b_i ≥ 0 }` and the
//! quadric model of the real moment-angle manifold they induce.

pub mod linalg;
mod quadric;

pub use quadric::{
    lift_point, quadric_gradient_rank, relation_matrix, verify_nondegeneracy, EmbeddedPoint,
    NondegeneracyReport, QuadricJson, QuadricSystem, SampleFailure, SampleKind,
};

use thiserror::Error;

use crate::polytope::{validate_polytope, CombPolytope, PolytopeError};
use linalg::{binomial, dot, for_each_subset, norm, null_space_rref, rank, solve};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_SUBSET_GUARD: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HRepError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("normal matrix has rank {rank}, expected {n}")]
    RankDeficient { rank: usize, n: usize },
    #[error("region is unbounded along {direction:?}")]
    Unbounded { direction: Vec<f64> },
    #[error("region has empty interior")]
    EmptyInterior,
    #[error("half-space {0} is redundant")]
    RedundantHalfspace(usize),
    #[error("point {point:?} lies on {count} hyperplanes; presentation is not simple")]
    NotSimplePresentation { point: Vec<f64>, count: usize },
    #[error("{subsets} subsets exceed the enumeration guard {guard}")]
    GuardExceeded { subsets: u128, guard: u128 },
    #[error("point violates half-space {0}")]
    OutsidePolytope(usize),
    #[error("point misses the quadric system by {residual:e}")]
    NotOnVariety { residual: f64 },
    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// A vertex found by enumeration, with the half-spaces tight there.
#[derive(Debug, Clone, PartialEq)]
pub struct HVertex {
    pub point: Vec<f64>,
    pub tight: Vec<usize>,
}

/// A validated presentation: full rank, bounded, full-dimensional and
/// irredundant.
#[derive(Debug, Clone, PartialEq)]
pub struct HRep {
    n: usize,
    normals: Vec<Vec<f64>>,
    offsets: Vec<f64>,
    tol: f64,
    vertices: Vec<HVertex>,
}

/// Parses `n m` followed by `m` lines `a_1 … a_n b`.
pub fn parse_hrep(text: &str) -> Result<HRep, HRepError> {
    parse_hrep_with(text, DEFAULT_TOLERANCE, DEFAULT_SUBSET_GUARD)
}

pub fn parse_hrep_with(text: &str, tol: f64, guard: u128) -> Result<HRep, HRepError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: &str| HRepError::Parse {
        line,
        message: message.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(hline, "header must be two integers `n m`"))?;
    let [n, m] = head[..] else {
        return Err(err(hline, "header must be two integers `n m`"));
    };
    let mut rows = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let vals: Vec<f64> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| err(line, "expected decimal numbers"))?;
        if vals.len() != n + 1 || vals.iter().any(|v| !v.is_finite()) {
            return Err(err(line, &format!("expected {} finite numbers", n + 1)));
        }
        rows.push((vals[..n].to_vec(), vals[n]));
    }
    if rows.len() != m {
        return Err(err(hline, &format!("header announces {m} rows, found {}", rows.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, "trailing data after the last row"));
    }
    HRep::build(n, &rows, tol, guard)
}

impl HRep {
    pub fn from_rows(n: usize, rows: &[(Vec<f64>, f64)]) -> Result<HRep, HRepError> {
        HRep::build(n, rows, DEFAULT_TOLERANCE, DEFAULT_SUBSET_GUARD)
    }

    pub fn build(
        n: usize,
        rows: &[(Vec<f64>, f64)],
        tol: f64,
        guard: u128,
    ) -> Result<HRep, HRepError> {
        if n == 0 {
            return Err(HRepError::RankDeficient { rank: 0, n });
        }
        for (a, _) in rows {
            if a.len() != n {
                return Err(HRepError::DimensionMismatch {
                    expected: n,
                    found: a.len(),
                });
            }
        }
        let normals: Vec<Vec<f64>> = rows.iter().map(|(a, _)| a.clone()).collect();
        let offsets: Vec<f64> = rows.iter().map(|(_, b)| *b).collect();
        let r = rank(&normals, n, tol);
        if r < n {
            return Err(HRepError::RankDeficient { rank: r, n });
        }
        let mut h = HRep {
            n,
            normals,
            offsets,
            tol,
            vertices: Vec::new(),
        };
        h.check_bounded(guard)?;
        h.vertices = h.find_vertices(guard)?;
        if h.vertices.is_empty() {
            return Err(HRepError::EmptyInterior);
        }
        h.check_interior()?;
        h.check_irredundant()?;
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn halfspace_count(&self) -> usize {
        self.normals.len()
    }

    /// Normal `a_i` of half-space `i`.
    pub fn normal(&self, i: usize) -> &[f64] {
        &self.normals[i]
    }

    pub fn normals(&self) -> &[Vec<f64>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// `A` as an `n × m` row-major matrix (normals are its columns).
    pub fn a_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|r| self.normals.iter().map(|a| a[r]).collect())
            .collect()
    }

    /// `i_{A,b}(x) = Aᵗx + b`.
    pub fn affine_image(&self, x: &[f64]) -> Vec<f64> {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(a, b)| dot(a, x) + b)
            .collect()
    }

    /// Signed distance-like slack of `x` in half-space `i`.
    pub fn normalized_slack(&self, i: usize, x: &[f64]) -> f64 {
        (dot(&self.normals[i], x) + self.offsets[i]) / norm(&self.normals[i])
    }

    /// Feasibility tolerance, scaled by the size of the offsets.
    pub fn feasibility_tolerance(&self) -> f64 {
        let scale = self
            .normals
            .iter()
            .zip(&self.offsets)
            .map(|(a, b)| b.abs() / norm(a))
            .fold(1.0f64, f64::max);
        self.tol * scale
    }

    pub fn contains(&self, x: &[f64]) -> Result<(), HRepError> {
        let eps = self.feasibility_tolerance();
        match (0..self.normals.len()).find(|&i| self.normalized_slack(i, x) < -eps) {
            Some(i) => Err(HRepError::OutsidePolytope(i)),
            None => Ok(()),
        }
    }

    /// All vertices with their tight half-spaces.
    pub fn vertices(&self) -> &[HVertex] {
        &self.vertices
    }

    /// A recession direction `d ≠ 0` with `⟨a_i, d⟩ ≥ 0` for all `i` would
    /// be an extreme ray of a pointed cone, hence orthogonal to `n - 1`
    /// independent normals.
    fn check_bounded(&self, guard: u128) -> Result<(), HRepError> {
        let m = self.normals.len();
        let subsets = binomial(m, self.n - 1);
        if subsets > guard {
            return Err(HRepError::GuardExceeded { subsets, guard });
        }
        let mut found = None;
        for_each_subset(m, self.n - 1, |idx| {
            if found.is_some() {
                return;
            }
            let sub: Vec<Vec<f64>> = idx.iter().map(|&i| self.normals[i].clone()).collect();
            let null = null_space_rref(&sub, self.n, self.tol);
            if null.len() != 1 {
                return;
            }
            let d = &null[0];
            let scale = norm(d);
            for sign in [1.0, -1.0] {
                let dir: Vec<f64> = d.iter().map(|v| sign * v / scale).collect();
                let ok = self
                    .normals
                    .iter()
                    .all(|a| dot(a, &dir) / norm(a) >= -self.tol);
                if ok {
                    found = Some(dir);
                    return;
                }
            }
        });
        match found {
            Some(direction) => Err(HRepError::Unbounded { direction }),
            None => Ok(()),
        }
    }

    fn find_vertices(&self, guard: u128) -> Result<Vec<HVertex>, HRepError> {
        let m = self.normals.len();
        let subsets = binomial(m, self.n);
        if subsets > guard {
            return Err(HRepError::GuardExceeded { subsets, guard });
        }
        let eps = self.feasibility_tolerance();
        let mut out: Vec<HVertex> = Vec::new();
        for_each_subset(m, self.n, |idx| {
            let sub: Vec<Vec<f64>> = idx.iter().map(|&i| self.normals[i].clone()).collect();
            let rhs: Vec<f64> = idx.iter().map(|&i| -self.offsets[i]).collect();
            let Some(mut x) = solve(&sub, &rhs, self.tol) else {
                return;
            };
            // no negative zeros in output
            x.iter_mut().for_each(|v| *v += 0.0);
            if (0..m).any(|i| self.normalized_slack(i, &x) < -eps) {
                return;
            }
            let dup = out.iter().any(|v| {
                v.point
                    .iter()
                    .zip(&x)
                    .all(|(a, b)| (a - b).abs() <= 10.0 * eps)
            });
            if !dup {
                let tight = (0..m)
                    .filter(|&i| self.normalized_slack(i, &x).abs() <= eps)
                    .collect();
                out.push(HVertex { point: x, tight });
            }
        });
        Ok(out)
    }

    fn check_interior(&self) -> Result<(), HRepError> {
        let k = self.vertices.len() as f64;
        let centroid: Vec<f64> = (0..self.n)
            .map(|j| self.vertices.iter().map(|v| v.point[j]).sum::<f64>() / k)
            .collect();
        let eps = self.feasibility_tolerance();
        if (0..self.normals.len()).any(|i| self.normalized_slack(i, &centroid) <= eps) {
            return Err(HRepError::EmptyInterior);
        }
        Ok(())
    }

    /// Each half-space must be tight on an `(n-1)`-dimensional set of
    /// vertices, and no two may be tight on the same set.
    fn check_irredundant(&self) -> Result<(), HRepError> {
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.normals.len() {
            let on: Vec<usize> = (0..self.vertices.len())
                .filter(|&v| self.vertices[v].tight.contains(&i))
                .collect();
            if on.len() < self.n {
                return Err(HRepError::RedundantHalfspace(i));
            }
            let base = &self.vertices[on[0]].point;
            let diffs: Vec<Vec<f64>> = on[1..]
                .iter()
                .map(|&v| {
                    self.vertices[v]
                        .point
                        .iter()
                        .zip(base)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            if rank(&diffs, self.n, self.tol.sqrt()) < self.n - 1 {
                return Err(HRepError::RedundantHalfspace(i));
            }
            if supports.contains(&on) {
                return Err(HRepError::RedundantHalfspace(i));
            }
            supports.push(on);
        }
        Ok(())
    }
}

/// Turns a presentation into a simple [`CombPolytope`], facet `i` being
/// half-space `i`, together with vertex coordinates.
pub fn enumerate_vertices(h: &HRep) -> Result<(CombPolytope, Vec<Vec<f64>>), HRepError> {
    for v in h.vertices() {
        if v.tight.len() > h.dim() {
            return Err(HRepError::NotSimplePresentation {
                point: v.point.clone(),
                count: v.tight.len(),
            });
        }
    }
    let incidence = h.vertices().iter().map(|v| v.tight.clone()).collect();
    let p = validate_polytope(h.dim(), h.halfspace_count(), incidence, None)?;
    let coords = h.vertices().iter().map(|v| v.point.clone()).collect();
    Ok((p, coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polytope::combinatorial_isomorphic;

    const SIMPLEX3: &str = "3 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n-1 -1 -1 1\n";

    #[test]
    fn simplex_file_parses() {
        let h = parse_hrep(SIMPLEX3).unwrap();
        assert_eq!(h.halfspace_count(), 4);
        let (p, coords) = enumerate_vertices(&h).unwrap();
        assert!(p.is_simplex());
        let mut pts = coords.clone();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(
            pts,
            vec![
                vec![0.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 1.0, 0.0],
                vec![1.0, 0.0, 0.0]
            ]
        );
    }

    #[test]
    fn slab_is_unbounded() {
        let slab = "3 2\n1 0 0 0\n-1 0 0 1\n";
        assert!(matches!(
            parse_hrep(slab),
            Err(HRepError::RankDeficient { .. })
        ));
        // full rank but still open in a direction
        let wedge = "3 4\n1 0 0 0\n-1 0 0 1\n0 1 0 0\n0 0 1 0\n";
        assert!(matches!(parse_hrep(wedge), Err(HRepError::Unbounded { .. })));
    }

    #[test]
    fn cube_vertices_are_the_unit_corners() {
        let h = corpus::cube_hrep(3);
        let (p, coords) = enumerate_vertices(&h).unwrap();
        assert!(combinatorial_isomorphic(&p, &corpus::cube(3)).is_some());
        assert_eq!(coords.len(), 8);
        for x in coords {
            assert!(x.iter().all(|&c| c.abs() < 1e-12 || (c - 1.0).abs() < 1e-12));
        }
    }

    #[test]
    fn duplicated_row_is_redundant() {
        let text = "3 5\n1 0 0 0\n1 0 0 0\n0 1 0 0\n0 0 1 0\n-1 -1 -1 1\n";
        assert_eq!(parse_hrep(text), Err(HRepError::RedundantHalfspace(1)));
        let loose = "3 5\n1 0 0 0\n0 1 0 0\n0 0 1 0\n-1 -1 -1 1\n1 0 0 5\n";
        assert_eq!(parse_hrep(loose), Err(HRepError::RedundantHalfspace(4)));
    }

    #[test]
    fn empty_and_flat_regions() {
        let empty = "1 2\n1 -2\n-1 1\n";
        assert_eq!(parse_hrep(empty), Err(HRepError::EmptyInterior));
        let flat = "1 2\n1 -1\n-1 1\n";
        assert_eq!(parse_hrep(flat), Err(HRepError::EmptyInterior));
    }

    #[test]
    fn pyramid_is_not_simple() {
        let text = "3 5\n0 0 1 0\n1 0 -1 1\n-1 0 -1 1\n0 1 -1 1\n0 -1 -1 1\n";
        let h = parse_hrep(text).unwrap();
        assert!(matches!(
            enumerate_vertices(&h),
            Err(HRepError::NotSimplePresentation { count: 4, .. })
        ));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_hrep("3 4\n1 0 0\n"),
            Err(HRepError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_hrep(""), Err(HRepError::Parse { .. })));
    }

    #[test]
    fn guard_is_enforced() {
        let h = parse_hrep_with(SIMPLEX3, DEFAULT_TOLERANCE, 3);
        assert!(matches!(h, Err(HRepError::GuardExceeded { .. })));
    }
}
