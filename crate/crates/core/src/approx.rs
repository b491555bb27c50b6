//! Farthest-first burning heuristic for arbitrary graphs with a certified lower bound.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::burn::covers;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApproxError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("step {step} does not follow a prefix of length {prefix}")]
    StepMismatch { step: usize, prefix: usize },
    #[error("every vertex is already burned at step {0}")]
    NothingUnburned(usize),
}

/// Normalized distance of a candidate: `num / den`, or unreachable from
/// every earlier source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Score {
    Ratio { num: usize, den: usize },
    Unreachable,
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Score::Unreachable, Score::Unreachable) => Ordering::Equal,
            (Score::Unreachable, _) => Ordering::Greater,
            (_, Score::Unreachable) => Ordering::Less,
            (Score::Ratio { num: a, den: b }, Score::Ratio { num: c, den: d }) => {
                (*a as u128 * *d as u128).cmp(&(*c as u128 * *b as u128))
            }
        }
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub vertex: Vertex,
    /// `None` for the first source, which is given rather than chosen.
    pub score: Option<Score>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApproxResult {
    pub sequence: Vec<Vertex>,
    pub k: usize,
    /// Lower bound on the burning number implied by the run.
    pub implied_lower: usize,
    pub trace: Vec<TraceStep>,
}

/// Extends a prefix `x_1..x_{k-1}` by the vertex `u` maximizing
/// `min_j d(u, x_j) / (k - j + 1)` over vertices not yet burned at step `k`
/// (those with `d(u, x_j) >= k - j` for every `j`). Unreachable counts as
/// infinitely far; ties go to the smallest index.
pub fn next_fire_source(g: &Graph, k: usize, prefix: &[Vertex]) -> Result<Vec<Vertex>, ApproxError> {
    let dists: Vec<Vec<Option<usize>>> = prefix.iter().map(|&x| g.bfs(x)).collect();
    let (u, _) = best_candidate(g, k, prefix, &dists)?;
    let mut out = prefix.to_vec();
    out.push(u);
    Ok(out)
}

fn best_candidate(
    g: &Graph,
    k: usize,
    prefix: &[Vertex],
    dists: &[Vec<Option<usize>>],
) -> Result<(Vertex, Score), ApproxError> {
    if k != prefix.len() + 1 {
        return Err(ApproxError::StepMismatch { step: k, prefix: prefix.len() });
    }
    if let Some(&x) = prefix.iter().find(|&&x| x >= g.order()) {
        return Err(ApproxError::VertexOutOfRange(x));
    }
    let mut best: Option<(Vertex, Score)> = None;
    'cand: for u in 0..g.order() {
        let mut score = Score::Unreachable;
        for (i, dist) in dists.iter().enumerate() {
            let j = i + 1;
            match dist[u] {
                Some(d) if d < k - j => continue 'cand,
                Some(d) => score = score.min(Score::Ratio { num: d, den: k - j + 1 }),
                None => {}
            }
        }
        if best.is_none_or(|(_, b)| score > b) {
            best = Some((u, score));
        }
    }
    best.ok_or(ApproxError::NothingUnburned(k))
}

/// Grows a sequence from `x1` (default vertex 0) with [`next_fire_source`]
/// until the balls `N_{k-i}[x_i]` cover the graph. The output is a burning
/// sequence of length at most three times the burning number.
///
/// `implied_lower` is `max(ceil(k/3), ceil((k-1)/3) + 1)`, the second term
/// coming from the last prefix that failed to cover.
pub fn burn_3approx(g: &Graph, x1: Option<Vertex>) -> Result<ApproxResult, ApproxError> {
    if g.order() == 0 {
        return Err(ApproxError::Empty);
    }
    let x1 = x1.unwrap_or(0);
    if x1 >= g.order() {
        return Err(ApproxError::VertexOutOfRange(x1));
    }
    let mut seq = vec![x1];
    let mut dists = vec![g.bfs(x1)];
    let mut trace = vec![TraceStep { step: 1, vertex: x1, score: None }];
    while !covers(g, &seq) {
        let k = seq.len() + 1;
        let (u, score) = best_candidate(g, k, &seq, &dists)?;
        seq.push(u);
        dists.push(g.bfs(u));
        trace.push(TraceStep { step: k, vertex: u, score: Some(score) });
    }
    let k = seq.len();
    let implied_lower = if k >= 2 { k.div_ceil(3).max((k - 1).div_ceil(3) + 1) } else { 1 };
    Ok(ApproxResult { sequence: seq, k, implied_lower, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burn::verify;

    #[test]
    fn farthest_on_path() {
        let p9 = Graph::path(9);
        assert_eq!(next_fire_source(&p9, 2, &[0]).unwrap(), vec![0, 8]);
    }

    #[test]
    fn unreachable_dominates() {
        let g = Graph::empty(2);
        assert_eq!(next_fire_source(&g, 2, &[0]).unwrap(), vec![0, 1]);
        let r = burn_3approx(&g, None).unwrap();
        assert_eq!(r.sequence, vec![0, 1]);
    }

    #[test]
    fn k2_has_one_candidate() {
        let g = Graph::path(2);
        assert_eq!(next_fire_source(&g, 2, &[0]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn first_step_defaults_to_zero() {
        assert_eq!(next_fire_source(&Graph::path(3), 1, &[]).unwrap(), vec![0]);
        let r = burn_3approx(&Graph::empty(1), None).unwrap();
        assert_eq!((r.k, r.implied_lower), (1, 1));
    }

    #[test]
    fn step_must_match_prefix() {
        assert!(matches!(next_fire_source(&Graph::path(3), 3, &[0]), Err(ApproxError::StepMismatch { .. })));
    }

    #[test]
    fn score_order() {
        let half = Score::Ratio { num: 1, den: 2 };
        let two_quarters = Score::Ratio { num: 2, den: 4 };
        assert_eq!(half.cmp(&two_quarters), Ordering::Equal);
        assert!(Score::Unreachable > Score::Ratio { num: 100, den: 1 });
    }

    #[test]
    fn verifies_on_paths() {
        for n in 1..40 {
            let g = Graph::path(n);
            let r = burn_3approx(&g, None).unwrap();
            assert!(verify(&g, &r.sequence), "P{n}");
        }
    }
}
