use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::linalg::{dot, null_space_rref, rank, singular_values};
use super::{HRep, HRepError};

/// The `m - n` equations `Σ_k γ_jk y_k² = Σ_k γ_jk b_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricSystem {
    m: usize,
    gamma: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    tol: f64,
}

/// Wire form `{"m", "gamma", "rhs"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadricJson {
    pub m: usize,
    pub gamma: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

/// A point of `ℝᵐ` on the quadric model, optionally remembering the point
/// of `P` and the sign vector it was lifted from.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddedPoint {
    pub y: Vec<f64>,
    pub source: Option<(Vec<f64>, Vec<i8>)>,
}

/// Γ: a basis of the linear relations among the normals, so `Γ Aᵗ = 0`.
///
/// Rows come from the free columns of the reduced row echelon form of `A`
/// and are rescaled so each row's largest-magnitude entry equals `+1`.
pub fn relation_matrix(h: &HRep) -> Result<QuadricSystem, HRepError> {
    let n = h.dim();
    let m = h.halfspace_count();
    let a = h.a_matrix();
    let r = rank(&a, m, h.tolerance());
    if r != n {
        return Err(HRepError::RankDeficient { rank: r, n });
    }
    let mut gamma = null_space_rref(&a, m, h.tolerance());
    for row in &mut gamma {
        let lead = row
            .iter()
            .copied()
            .fold(0.0f64, |best, v| if v.abs() > best.abs() + 1e-12 { v } else { best });
        for v in row.iter_mut() {
            *v /= lead;
            if v.abs() < 1e-15 {
                *v = 0.0;
            }
        }
    }
    if gamma.len() != m - n || rank(&gamma, m, h.tolerance()) != m - n {
        return Err(HRepError::RankDeficient {
            rank: rank(&gamma, m, h.tolerance()),
            n: m - n,
        });
    }
    let rhs = gamma.iter().map(|row| dot(row, h.offsets())).collect();
    Ok(QuadricSystem {
        m,
        gamma,
        rhs,
        tol: h.tolerance(),
    })
}

impl QuadricSystem {
    /// Builds a system from explicit coefficients.
    pub fn new(gamma: Vec<Vec<f64>>, rhs: Vec<f64>, tol: f64) -> Result<Self, HRepError> {
        let m = gamma.first().map_or(0, Vec::len);
        if gamma.len() != rhs.len() {
            return Err(HRepError::DimensionMismatch {
                expected: gamma.len(),
                found: rhs.len(),
            });
        }
        if let Some(row) = gamma.iter().find(|r| r.len() != m) {
            return Err(HRepError::DimensionMismatch {
                expected: m,
                found: row.len(),
            });
        }
        Ok(QuadricSystem { m, gamma, rhs, tol })
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn equation_count(&self) -> usize {
        self.gamma.len()
    }

    pub fn gamma(&self) -> &[Vec<f64>] {
        &self.gamma
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// `Σ_k γ_jk y_k² - rhs_j` for each equation.
    pub fn residuals(&self, y: &[f64]) -> Vec<f64> {
        let sq: Vec<f64> = y.iter().map(|v| v * v).collect();
        self.gamma
            .iter()
            .zip(&self.rhs)
            .map(|(row, r)| dot(row, &sq) - r)
            .collect()
    }

    pub fn max_residual(&self, y: &[f64]) -> f64 {
        self.residuals(y).iter().fold(0.0f64, |a, r| a.max(r.abs()))
    }

    fn residual_tolerance(&self) -> f64 {
        let scale = self.rhs.iter().fold(1.0f64, |a, r| a.max(r.abs()));
        self.tol * scale * 10.0
    }

    pub fn contains(&self, y: &[f64]) -> bool {
        y.len() == self.m && self.max_residual(y) <= self.residual_tolerance()
    }

    /// Rows `(2γ_j1 y_1, …, 2γ_jm y_m)`.
    pub fn gradients(&self, y: &[f64]) -> Vec<Vec<f64>> {
        self.gamma
            .iter()
            .map(|row| row.iter().zip(y).map(|(g, v)| 2.0 * g * v).collect())
            .collect()
    }

    pub fn to_json(&self) -> QuadricJson {
        QuadricJson {
            m: self.m,
            gamma: self.gamma.clone(),
            rhs: self.rhs.clone(),
        }
    }
}

/// Lifts `x ∈ P` to `y` with `y_k = signs_k · √(⟨a_k, x⟩ + b_k)`.
pub fn lift_point(h: &HRep, x: &[f64], signs: &[i8]) -> Result<EmbeddedPoint, HRepError> {
    if x.len() != h.dim() {
        return Err(HRepError::DimensionMismatch {
            expected: h.dim(),
            found: x.len(),
        });
    }
    if signs.len() != h.halfspace_count() {
        return Err(HRepError::DimensionMismatch {
            expected: h.halfspace_count(),
            found: signs.len(),
        });
    }
    h.contains(x)?;
    let y = h
        .affine_image(x)
        .iter()
        .zip(signs)
        .map(|(v, &s)| f64::from(s.signum()) * v.max(0.0).sqrt())
        .collect();
    Ok(EmbeddedPoint {
        y,
        source: Some((x.to_vec(), signs.to_vec())),
    })
}

impl EmbeddedPoint {
    /// The canonical action of the `k`-th generator: negate `y_k`.
    pub fn reflect(&self, k: usize) -> EmbeddedPoint {
        let mut y = self.y.clone();
        y[k] = -y[k];
        let source = self.source.as_ref().map(|(x, s)| {
            let mut s = s.clone();
            s[k] = -s[k];
            (x.clone(), s)
        });
        EmbeddedPoint { y, source }
    }
}

/// Rank of the quadric gradients at `y`.
pub fn quadric_gradient_rank(q: &QuadricSystem, y: &EmbeddedPoint) -> Result<usize, HRepError> {
    if !q.contains(&y.y) {
        return Err(HRepError::NotOnVariety {
            residual: q.max_residual(&y.y),
        });
    }
    Ok(rank(&q.gradients(&y.y), q.m, q.tol))
}

/// Smallest singular value of the gradient matrix at `y`.
pub fn gradient_margin(q: &QuadricSystem, y: &[f64]) -> f64 {
    singular_values(&q.gradients(y), q.m)
        .last()
        .copied()
        .unwrap_or(f64::INFINITY)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Vertex,
    FacetInterior,
    Interior,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleFailure {
    pub index: usize,
    pub kind: SampleKind,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NondegeneracyReport {
    pub expected_rank: usize,
    pub min_rank: usize,
    pub samples: usize,
    pub max_residual: f64,
    /// Smallest gradient singular value seen; distance from degeneracy.
    pub min_margin: f64,
    pub failures: Vec<SampleFailure>,
}

impl NondegeneracyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.min_rank == self.expected_rank
    }
}

/// Checks full gradient rank at every vertex, at each facet centroid and at
/// `sample_count` random points (alternating interior and facet-interior),
/// each lifted with random signs.
///
/// Sample `i` draws from its own ChaCha stream, so results do not depend
/// on evaluation order.
pub fn verify_nondegeneracy(
    h: &HRep,
    sample_count: usize,
    seed: u64,
) -> Result<NondegeneracyReport, HRepError> {
    let q = relation_matrix(h)?;
    let m = h.halfspace_count();
    let expected = m - h.dim();
    let verts: Vec<&[f64]> = h.vertices().iter().map(|v| v.point.as_slice()).collect();
    let facet_verts: Vec<Vec<&[f64]>> = (0..m)
        .map(|f| {
            h.vertices()
                .iter()
                .filter(|v| v.tight.contains(&f))
                .map(|v| v.point.as_slice())
                .collect()
        })
        .collect();

    let mut points: Vec<(SampleKind, Vec<f64>)> = Vec::new();
    for v in &verts {
        points.push((SampleKind::Vertex, v.to_vec()));
    }
    for fv in &facet_verts {
        points.push((SampleKind::FacetInterior, combine(fv, &vec![1.0; fv.len()])));
    }
    let fixed = points.len();
    let total = fixed + sample_count;

    let mut report = NondegeneracyReport {
        expected_rank: expected,
        min_rank: usize::MAX,
        samples: total,
        max_residual: 0.0,
        min_margin: f64::INFINITY,
        failures: Vec::new(),
    };
    for i in 0..total {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let (kind, x) = if i < fixed {
            points[i].clone()
        } else {
            let j = i - fixed;
            if j.is_multiple_of(2) {
                (SampleKind::Interior, random_combination(&verts, &mut rng))
            } else {
                let f = (j / 2) % m;
                (
                    SampleKind::FacetInterior,
                    random_combination(&facet_verts[f], &mut rng),
                )
            }
        };
        let signs: Vec<i8> = (0..m)
            .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
            .collect();
        let lifted = lift_point(h, &x, &signs)?;
        report.max_residual = report.max_residual.max(q.max_residual(&lifted.y));
        report.min_margin = report.min_margin.min(gradient_margin(&q, &lifted.y));
        let r = match quadric_gradient_rank(&q, &lifted) {
            Ok(r) => r,
            Err(HRepError::NotOnVariety { .. }) => 0,
            Err(e) => return Err(e),
        };
        report.min_rank = report.min_rank.min(r);
        if r != expected {
            report.failures.push(SampleFailure {
                index: i,
                kind,
                x,
                y: lifted.y,
                rank: r,
            });
        }
    }
    Ok(report)
}

fn combine(points: &[&[f64]], weights: &[f64]) -> Vec<f64> {
    let total: f64 = weights.iter().sum();
    let dim = points[0].len();
    (0..dim)
        .map(|j| {
            points
                .iter()
                .zip(weights)
                .map(|(p, w)| p[j] * w)
                .sum::<f64>()
                / total
        })
        .collect()
}

/// Uniform point of the simplex spanned by `points`' barycentric weights.
fn random_combination(points: &[&[f64]], rng: &mut ChaCha8Rng) -> Vec<f64> {
    let weights: Vec<f64> = points
        .iter()
        .map(|_| -(1.0 - rng.gen::<f64>()).ln() + 1e-12)
        .collect();
    combine(points, &weights)
}
