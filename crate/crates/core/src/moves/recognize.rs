use serde::{Deserialize, Serialize};

use crate::polytope::{validate_polytope, CombPolytope};

use super::cut::{collapse_admissible, simplex_facet_collapse, vertex_cut};
use super::MoveError;

/// One collapse: facet index at the time of collapse and the facet set of
/// the vertex it became.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseStep {
    pub facet: usize,
    pub merged_vertex: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub start: CombPolytope,
    pub end: CombPolytope,
    pub steps: Vec<CollapseStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    /// Whether the polytope reduces to the simplex.
    pub reducible: bool,
    pub trace: ReductionTrace,
}

/// Wire form of a recognition result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub verdict: String,
    pub steps: Vec<usize>,
    pub intermediate_facet_counts: Vec<usize>,
    #[serde(default)]
    pub cut_vertices: Vec<Vec<usize>>,
}

/// Decides whether a simple 3-polytope arises from Δ³ by vertex-cuts.
///
/// Greedily collapses the lowest-indexed admissible triangle until none is
/// left. The answer is YES exactly when the run ends at Δ³.
pub fn recognize_vertexcut_reducible(p: &CombPolytope) -> Result<Recognition, MoveError> {
    if p.dim() != 3 {
        return Err(MoveError::DimensionUnsupported(p.dim()));
    }
    let mut current = p.clone();
    let mut steps = Vec::new();
    while !current.is_simplex() {
        let Some(f) = (0..current.facet_count()).find(|&f| collapse_admissible(&current, f)) else {
            break;
        };
        let next = simplex_facet_collapse(&current, f)?;
        let merged = next.vertices().last().expect("collapse adds a vertex").clone();
        steps.push(CollapseStep {
            facet: f,
            merged_vertex: merged,
        });
        current = next;
    }
    Ok(Recognition {
        reducible: current.is_simplex(),
        trace: ReductionTrace {
            start: p.clone(),
            end: current,
            steps,
        },
    })
}

impl ReductionTrace {
    /// Re-runs the collapses from `start`.
    pub fn replay(&self) -> Result<CombPolytope, MoveError> {
        self.steps
            .iter()
            .try_fold(self.start.clone(), |p, s| simplex_facet_collapse(&p, s.facet))
    }

    /// Rebuilds `start` from `end` by vertex-cuts, undoing the collapses in
    /// reverse order. Each new facet is moved back to the index it had
    /// before its collapse.
    pub fn replay_as_vertex_cuts(&self) -> Result<CombPolytope, MoveError> {
        let mut p = self.end.clone();
        for step in self.steps.iter().rev() {
            let v = p
                .find_vertex(&step.merged_vertex)
                .ok_or(MoveError::TraceMismatch)?;
            let cut = vertex_cut(&p, v)?;
            let m = cut.facet_count();
            let perm: Vec<usize> = (0..m)
                .map(|g| {
                    if g == m - 1 {
                        step.facet
                    } else if g >= step.facet {
                        g + 1
                    } else {
                        g
                    }
                })
                .collect();
            let vertices = cut
                .vertices()
                .iter()
                .map(|s| s.iter().map(|&g| perm[g]).collect())
                .collect();
            p = validate_polytope(cut.dim(), m, vertices, None)?;
        }
        Ok(p)
    }

    /// Facet counts along the chain, `start` first.
    pub fn facet_counts(&self) -> Vec<usize> {
        let m = self.start.facet_count();
        (0..=self.steps.len()).map(|i| m - i).collect()
    }
}

impl Recognition {
    pub fn to_json(&self) -> TraceJson {
        TraceJson {
            verdict: if self.reducible { "yes" } else { "no" }.to_string(),
            steps: self.trace.steps.iter().map(|s| s.facet).collect(),
            intermediate_facet_counts: self.trace.facet_counts(),
            cut_vertices: self
                .trace
                .steps
                .iter()
                .map(|s| s.merged_vertex.clone())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::polytope::combinatorial_isomorphic;

    #[test]
    fn simplex_is_yes_with_empty_trace() {
        let r = recognize_vertexcut_reducible(&CombPolytope::simplex(3)).unwrap();
        assert!(r.reducible);
        assert!(r.trace.steps.is_empty());
    }

    #[test]
    fn prism_is_one_step() {
        let r = recognize_vertexcut_reducible(&corpus::prism(3)).unwrap();
        assert!(r.reducible);
        assert_eq!(r.trace.steps.len(), 1);
        assert_eq!(r.trace.steps[0].facet, 3);
        let json = r.to_json();
        assert_eq!(json.verdict, "yes");
        assert_eq!(json.intermediate_facet_counts, vec![5, 4]);
    }

    #[test]
    fn cube_and_cut_cube_are_no() {
        let c = corpus::cube(3);
        let r = recognize_vertexcut_reducible(&c).unwrap();
        assert!(!r.reducible);
        assert!(r.trace.steps.is_empty());

        let cut = vertex_cut(&c, 0).unwrap();
        let r = recognize_vertexcut_reducible(&cut).unwrap();
        assert!(!r.reducible);
        assert_eq!(r.trace.steps.len(), 1);
        assert!(combinatorial_isomorphic(&r.trace.end, &c).is_some());
    }

    #[test]
    fn traces_replay_both_ways() {
        let p = corpus::random_vertex_cuts(7, 3);
        let r = recognize_vertexcut_reducible(&p).unwrap();
        assert!(r.reducible);
        assert_eq!(r.trace.replay().unwrap(), r.trace.end);
        let rebuilt = r.trace.replay_as_vertex_cuts().unwrap();
        assert!(combinatorial_isomorphic(&rebuilt, &p).is_some());
    }

    #[test]
    fn four_dimensional_input_is_rejected() {
        assert_eq!(
            recognize_vertexcut_reducible(&CombPolytope::simplex(4)),
            Err(MoveError::DimensionUnsupported(4))
        );
    }
}
