//! Firefighting and bootstrap percolation.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`firefight_bruteforce`] unless overridden.
pub const FIREFIGHT_BRUTEFORCE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementFault {
    AlreadyBurned,
    AlreadyProtected,
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContactError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("firefighter {step} placed on vertex {vertex}: {fault:?}")]
    InvalidPlacement { step: usize, vertex: Vertex, fault: PlacementFault },
    #[error("graph has {order} vertices, above the enumeration cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("path bound k must be at least 2, got {0}")]
    PathBoundTooSmall(usize),
    #[error("threshold must be at least 2, got {0}")]
    ThresholdTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FirefightRun {
    pub origin: Vertex,
    pub placements: Vec<Vertex>,
    /// Vertices catching fire at each step; entry 0 is the origin at step 1.
    pub burned_per_step: Vec<Vec<Vertex>>,
    pub burned: Vec<Vertex>,
    pub protected: Vec<Vertex>,
    pub saved: usize,
}

/// Fire starts at `origin` in step 1. In each later step `i` the
/// firefighter `placements[i - 2]`, if any, protects an unburned,
/// unprotected vertex, then fire spreads to unprotected neighbors. The
/// run ends once fire stops spreading and no placements remain.
pub fn verify_firefighter(g: &Graph, origin: Vertex, placements: &[Vertex]) -> Result<FirefightRun, ContactError> {
    let n = g.order();
    if origin >= n {
        return Err(ContactError::VertexOutOfRange(origin));
    }
    let mut burned = vec![false; n];
    let mut protected = vec![false; n];
    burned[origin] = true;
    let mut per_step = vec![vec![origin]];
    let mut frontier = vec![origin];
    let mut step = 1;
    loop {
        step += 1;
        let placing = placements.get(step - 2);
        if let Some(&f) = placing {
            let fault = if f >= n {
                Some(PlacementFault::OutOfRange)
            } else if burned[f] {
                Some(PlacementFault::AlreadyBurned)
            } else if protected[f] {
                Some(PlacementFault::AlreadyProtected)
            } else {
                None
            };
            if let Some(fault) = fault {
                return Err(ContactError::InvalidPlacement { step, vertex: f, fault });
            }
            protected[f] = true;
        }
        let fresh = spread(g, &frontier, &mut burned, &protected);
        if fresh.is_empty() && step > placements.len() {
            break;
        }
        per_step.push(fresh.clone());
        frontier = fresh;
    }
    let burned_list: Vec<Vertex> = (0..n).filter(|&v| burned[v]).collect();
    Ok(FirefightRun {
        origin,
        placements: placements.to_vec(),
        saved: n - burned_list.len(),
        burned: burned_list,
        protected: (0..n).filter(|&v| protected[v]).collect(),
        burned_per_step: per_step,
    })
}

fn spread(g: &Graph, frontier: &[Vertex], burned: &mut [bool], protected: &[bool]) -> Vec<Vertex> {
    let mut fresh = Vec::new();
    for &u in frontier {
        for &w in g.neighbors(u) {
            if !burned[w] && !protected[w] {
                burned[w] = true;
                fresh.push(w);
            }
        }
    }
    fresh.sort_unstable();
    fresh
}

/// Vertices lost if fire spreads freely from `burned` around `protected`.
fn final_burned(g: &Graph, burned: &[bool], frontier: &[Vertex], protected: &[bool]) -> usize {
    let mut b = burned.to_vec();
    let mut frontier = frontier.to_vec();
    while !frontier.is_empty() {
        frontier = spread(g, &frontier, &mut b, protected);
    }
    b.iter().filter(|&&x| x).count()
}

struct FireSearch<'a> {
    g: &'a Graph,
    max_len: usize,
    best: Option<(usize, Vec<Vertex>)>,
}

impl FireSearch<'_> {
    /// Keeps the placement list saving most vertices, then the shortest,
    /// then the lexicographically smallest.
    fn offer(&mut self, saved: usize, seq: &[Vertex]) {
        let better = match &self.best {
            None => true,
            Some((s, b)) => {
                saved > *s || saved == *s && (seq.len() < b.len() || seq.len() == b.len() && seq < b.as_slice())
            }
        };
        if better {
            self.best = Some((saved, seq.to_vec()));
        }
    }

    fn dfs(&mut self, burned: &mut Vec<bool>, protected: &mut Vec<bool>, frontier: &[Vertex], seq: &mut Vec<Vertex>) {
        let n = self.g.order();
        let saved = n - final_burned(self.g, burned, frontier, protected);
        self.offer(saved, seq);
        // Once the fire has stopped, more firefighters change nothing.
        if frontier.is_empty() || seq.len() == self.max_len {
            return;
        }
        for v in 0..n {
            if burned[v] || protected[v] {
                continue;
            }
            protected[v] = true;
            seq.push(v);
            let fresh = spread(self.g, frontier, burned, protected);
            self.dfs(burned, protected, &fresh, seq);
            for &w in &fresh {
                burned[w] = false;
            }
            seq.pop();
            protected[v] = false;
        }
    }

    fn run(g: &Graph, origin: Vertex, max_len: usize) -> Result<FirefightRun, ContactError> {
        if origin >= g.order() {
            return Err(ContactError::VertexOutOfRange(origin));
        }
        let mut search = FireSearch { g, max_len, best: None };
        let mut burned = vec![false; g.order()];
        burned[origin] = true;
        search.dfs(&mut burned, &mut vec![false; g.order()], &[origin], &mut Vec::new());
        let (_, seq) = search.best.expect("the empty placement list is always offered");
        verify_firefighter(g, origin, &seq)
    }
}

/// Optimal firefighter placements by exhaustive search. Ties go to the
/// shortest list, then the lexicographically smallest.
pub fn firefight_bruteforce(g: &Graph, origin: Vertex, cap: usize) -> Result<FirefightRun, ContactError> {
    if g.order() > cap {
        return Err(ContactError::TooLarge { order: g.order(), cap });
    }
    FireSearch::run(g, origin, g.order())
}

/// Optimal placements on a graph without an induced path on `k` vertices,
/// searching only placement lists of length at most `k - 2`. Same tie-break
/// as [`firefight_bruteforce`].
pub fn firefight_pk_free(g: &Graph, origin: Vertex, k: usize) -> Result<FirefightRun, ContactError> {
    if k < 2 {
        return Err(ContactError::PathBoundTooSmall(k));
    }
    FireSearch::run(g, origin, k - 2)
}

/// Vertex count of a longest induced path starting at `s`.
pub fn longest_induced_path_from(g: &Graph, s: Vertex) -> usize {
    fn rec(g: &Graph, path: &mut Vec<Vertex>, on: &mut [bool]) -> usize {
        let last = *path.last().unwrap();
        let mut best = path.len();
        for &w in g.neighbors(last) {
            if on[w] || path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            on[w] = true;
            path.push(w);
            best = best.max(rec(g, path, on));
            path.pop();
            on[w] = false;
        }
        best
    }
    let mut on = vec![false; g.order()];
    on[s] = true;
    rec(g, &mut vec![s], &mut on)
}

/// No induced path on `k` vertices.
pub fn is_pk_free(g: &Graph, k: usize) -> bool {
    (0..g.order()).all(|s| longest_induced_path_from(g, s) < k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PercolationRun {
    pub threshold: usize,
    /// `A_0, A_1, ...` up to the first repeated set, each sorted.
    pub timeline: Vec<Vec<Vertex>>,
    /// Index `T` of the final set, with `A_T = A_{T+1}`.
    pub stabilized_at: usize,
    pub percolates: bool,
    /// False for threshold 2, which lies outside the strict `r > 2` range.
    pub literal_range: bool,
}

/// `A_t = A_{t-1}` plus every vertex `v` with `|N[v] ∩ A_{t-1}| >= r`,
/// iterated to a fixed point. Closed neighborhoods count `v` itself.
pub fn bootstrap_percolate(g: &Graph, seed: &[Vertex], r: usize) -> Result<PercolationRun, ContactError> {
    if r < 2 {
        return Err(ContactError::ThresholdTooSmall(r));
    }
    let n = g.order();
    if let Some(&v) = seed.iter().find(|&&v| v >= n) {
        return Err(ContactError::VertexOutOfRange(v));
    }
    let mut active = vec![false; n];
    seed.iter().for_each(|&v| active[v] = true);
    let snapshot = |a: &[bool]| (0..n).filter(|&v| a[v]).collect::<Vec<_>>();
    let mut timeline = vec![snapshot(&active)];
    loop {
        let next: Vec<bool> =
            (0..n).map(|v| active[v] || g.neighbors(v).iter().filter(|&&w| active[w]).count() >= r).collect();
        if next == active {
            break;
        }
        active = next;
        timeline.push(snapshot(&active));
    }
    Ok(PercolationRun {
        threshold: r,
        stabilized_at: timeline.len() - 1,
        percolates: active.iter().all(|&a| a),
        timeline,
        literal_range: r > 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_from_endpoint() {
        let g = Graph::path(3);
        let run = verify_firefighter(&g, 0, &[1]).unwrap();
        assert_eq!(run.saved, 2);
        assert_eq!(run.burned, vec![0]);
        assert_eq!(firefight_bruteforce(&g, 0, 10).unwrap().placements, vec![1]);
        assert_eq!(firefight_bruteforce(&g, 1, 10).unwrap().saved, 1);
    }

    #[test]
    fn invalid_placements() {
        let g = Graph::path(3);
        let err = verify_firefighter(&g, 0, &[0]).unwrap_err();
        assert_eq!(err, ContactError::InvalidPlacement { step: 2, vertex: 0, fault: PlacementFault::AlreadyBurned });
        let err = verify_firefighter(&Graph::path(5), 2, &[1, 1]).unwrap_err();
        assert!(matches!(err, ContactError::InvalidPlacement { step: 3, fault: PlacementFault::AlreadyProtected, .. }));
        assert!(verify_firefighter(&g, 5, &[]).is_err());
    }

    #[test]
    fn no_firefighters_burns_component() {
        let g = Graph::path(4).disjoint_union(&Graph::empty(1));
        let run = verify_firefighter(&g, 0, &[]).unwrap();
        assert_eq!(run.saved, 1);
        assert_eq!(run.burned_per_step, vec![vec![0], vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn complete_and_star() {
        for n in 2..7 {
            assert_eq!(firefight_bruteforce(&Graph::complete(n), 0, 10).unwrap().saved, 1);
            let star = Graph::star(n);
            assert_eq!(firefight_bruteforce(&star, 0, 10).unwrap().saved, 1);
            assert_eq!(firefight_bruteforce(&star, 1, 10).unwrap().saved, n);
        }
    }

    #[test]
    fn induced_paths() {
        assert_eq!(longest_induced_path_from(&Graph::path(5), 0), 5);
        assert_eq!(longest_induced_path_from(&Graph::cycle(5).unwrap(), 0), 4);
        assert_eq!(longest_induced_path_from(&Graph::complete(4), 0), 2);
        assert!(is_pk_free(&Graph::complete(5), 3));
        assert!(!is_pk_free(&Graph::path(5), 5));
    }

    #[test]
    fn percolation_outcomes() {
        let run = bootstrap_percolate(&Graph::complete(4), &[0, 1], 2).unwrap();
        assert!(run.percolates);
        assert_eq!(run.stabilized_at, 1);
        assert!(!run.literal_range);
        let run = bootstrap_percolate(&Graph::path(3), &[0, 2], 2).unwrap();
        assert!(run.percolates);
        let run = bootstrap_percolate(&Graph::path(3), &[0], 2).unwrap();
        assert!(!run.percolates && run.stabilized_at == 0);
        let run = bootstrap_percolate(&Graph::complete(3), &[0, 1, 2], 3).unwrap();
        assert!(run.percolates && run.stabilized_at == 0);
        assert_eq!(bootstrap_percolate(&Graph::path(3), &[0], 1), Err(ContactError::ThresholdTooSmall(1)));
    }
}
