//! The burning process: simulation, verification of a sequence and its clusters.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// How a vertex caught fire.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BurnRole {
    /// Chosen as a fire source.
    Source,
    /// Reached by spread from an earlier burned vertex.
    Spread,
}

impl BurnRole {
    pub fn letter(self) -> char {
        match self {
            BurnRole::Source => 'a',
            BurnRole::Spread => 'b',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    AlreadyBurned,
    OutOfRange,
}

/// First illegal placement of a sequence (`step` is 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub step: usize,
    pub vertex: Vertex,
    pub reason: ViolationReason,
}

/// Per-vertex record of a simulated burning run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnSchedule {
    pub sources: Vec<Vertex>,
    /// Step at which each vertex caught fire, `None` if it never did.
    pub burn_step: Vec<Option<usize>>,
    pub role: Vec<Option<BurnRole>>,
}

impl BurnSchedule {
    /// Labels such as `2a` (source at step 2) or `3b` (spread at step 3).
    pub fn label(&self, v: Vertex) -> Option<String> {
        Some(format!("{}{}", self.burn_step[v]?, self.role[v]?.letter()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnOutcome {
    pub valid: bool,
    pub complete: bool,
    pub first_violation: Option<Violation>,
    pub schedule: BurnSchedule,
}

impl BurnOutcome {
    pub fn is_burning_sequence(&self) -> bool {
        self.valid && self.complete
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurnError {
    #[error("sequence is not a burning sequence of the graph")]
    NotABurningSequence,
}

/// Runs the process step by step. In step `t` the source `x_t` is lit and
/// then fire spreads from everything burned before step `t`. A source that
/// would be reached by spread in the same step is legal and recorded as a
/// source. An illegal placement is reported and otherwise skipped.
pub fn simulate(g: &Graph, sequence: &[Vertex]) -> BurnOutcome {
    let n = g.order();
    let mut burn_step = vec![None; n];
    let mut role = vec![None; n];
    // Vertices first burned in the previous step; older ones have no unburned neighbors.
    let mut frontier: Vec<Vertex> = Vec::new();
    let mut first_violation = None;
    for (i, &x) in sequence.iter().enumerate() {
        let step = i + 1;
        let spread: Vec<Vertex> = {
            let mut fresh = Vec::new();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if burn_step[w].is_none() {
                        burn_step[w] = Some(step);
                        role[w] = Some(BurnRole::Spread);
                        fresh.push(w);
                    }
                }
            }
            fresh
        };
        let reason = if x >= n {
            Some(ViolationReason::OutOfRange)
        } else if burn_step[x].is_some_and(|s| s < step) {
            Some(ViolationReason::AlreadyBurned)
        } else {
            None
        };
        let mut next = spread;
        match reason {
            Some(reason) => {
                first_violation.get_or_insert(Violation { step, vertex: x, reason });
            }
            None => {
                if burn_step[x].is_none() {
                    next.push(x);
                }
                burn_step[x] = Some(step);
                role[x] = Some(BurnRole::Source);
            }
        }
        frontier = next;
    }
    let complete = burn_step.iter().all(Option::is_some);
    BurnOutcome {
        valid: first_violation.is_none(),
        complete,
        first_violation,
        schedule: BurnSchedule { sources: sequence.to_vec(), burn_step, role },
    }
}

/// Remaining fire radius of each vertex reached by the balls
/// `N_{k-i}[x_i]`, or `None` when no ball reaches it.
fn coverage_radii(g: &Graph, sequence: &[Vertex]) -> Vec<Option<usize>> {
    let k = sequence.len();
    let mut best: Vec<Option<usize>> = vec![None; g.order()];
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    for (i, &x) in sequence.iter().enumerate() {
        let r = k - 1 - i;
        if best[x].is_none_or(|b| b < r) {
            best[x] = Some(r);
            buckets[r].push(x);
        }
    }
    for r in (1..k).rev() {
        let layer = std::mem::take(&mut buckets[r]);
        for u in layer {
            if best[u] != Some(r) {
                continue;
            }
            for &w in g.neighbors(u) {
                if best[w].is_none_or(|b| b < r - 1) {
                    best[w] = Some(r - 1);
                    buckets[r - 1].push(w);
                }
            }
        }
    }
    best
}

/// True when the balls `N_{k-i}[x_i]` cover every vertex.
pub fn covers(g: &Graph, sequence: &[Vertex]) -> bool {
    sequence.iter().all(|&x| x < g.order()) && coverage_radii(g, sequence).iter().all(Option::is_some)
}

/// Vertices outside every ball `N_{k-i}[x_i]`, sorted.
pub fn uncovered(g: &Graph, sequence: &[Vertex]) -> Vec<Vertex> {
    let radii = coverage_radii(g, sequence);
    (0..g.order()).filter(|&v| radii[v].is_none()).collect()
}

/// Checks a sequence without simulating it: the balls `N_{k-i}[x_i]` must
/// cover the graph, and no `x_j` may lie in `N_{j-i-1}[x_i]` for `i < j`.
pub fn verify(g: &Graph, sequence: &[Vertex]) -> bool {
    let n = g.order();
    if sequence.iter().any(|&x| x >= n) || !covers(g, sequence) {
        return false;
    }
    for (i, &x) in sequence.iter().enumerate() {
        let later = &sequence[i + 1..];
        if later.is_empty() {
            break;
        }
        let dist = g.bfs(x);
        for (off, &y) in later.iter().enumerate() {
            // j - i - 1 == off
            if dist[y].is_some_and(|d| d <= off) {
                return false;
            }
        }
    }
    true
}

/// Clusters `N_{k-i}[x_i]` of a burning sequence, each sorted.
pub fn clusters(g: &Graph, sequence: &[Vertex]) -> Result<Vec<Vec<Vertex>>, BurnError> {
    if !verify(g, sequence) {
        return Err(BurnError::NotABurningSequence);
    }
    let k = sequence.len();
    Ok(sequence.iter().enumerate().map(|(i, &x)| g.neighborhood(&[x], k - 1 - i)).collect())
}
