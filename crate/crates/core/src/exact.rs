//! Exact burning number: a reference enumerator and a pruned search.

use fixedbitset::FixedBitSet;
use num_integer::Roots;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::burn::verify;
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`burning_number_bruteforce`] unless overridden.
pub const BRUTEFORCE_CAP: usize = 9;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub k: usize,
    pub witness: Vec<Vertex>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {order} vertices, above the enumeration cap of {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("node budget exhausted after {nodes} nodes; burning number lies in [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize, nodes: u64 },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub node_budget: u64,
    /// Worker threads for the root-level fan-out; 1 runs sequentially.
    pub threads: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { node_budget: DEFAULT_NODE_BUDGET, threads: 1 }
    }
}

/// Least `t` with `t * t >= n`.
pub fn ceil_sqrt(n: usize) -> usize {
    let r = n.sqrt();
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// Cheap lower bound: the number of components, `ceil(sqrt(n))` on path
/// forests, and for each tree component `ceil(sqrt(l))` where `l` is the
/// order of its diameter path (an isometric subpath).
pub fn lower_bound(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let comps = g.components();
    let mut lb = comps.len();
    if g.is_path_forest() {
        lb = lb.max(ceil_sqrt(g.order()));
    }
    for comp in &comps {
        let sub = g.induced_subgraph(comp);
        if sub.is_tree() {
            let l = sub.diameter_path().expect("trees are connected").len();
            lb = lb.max(ceil_sqrt(l));
        }
    }
    lb
}

/// `radius + 1` for connected graphs; otherwise the largest component
/// radius plus the number of components.
pub fn upper_bound_radius(g: &Graph) -> usize {
    let comps = g.components();
    let max_radius =
        comps.iter().map(|c| g.induced_subgraph(c).radius().expect("components are connected")).max().unwrap_or(0);
    if comps.is_empty() {
        0
    } else {
        max_radius + comps.len()
    }
}

/// Tries ordered tuples of distinct vertices for `k = 1, 2, ...` in
/// lexicographic order and returns the first that verifies.
pub fn burning_number_bruteforce(g: &Graph, cap: usize) -> Result<ExactResult, ExactError> {
    let n = g.order();
    if n > cap {
        return Err(ExactError::TooLarge { order: n, cap });
    }
    let mut nodes = 0;
    for k in 0..=n {
        let mut found = None;
        for_each_tuple(n, k, &mut |t| {
            nodes += 1;
            if verify(g, t) {
                found = Some(t.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(witness) = found {
            return Ok(ExactResult { k, witness, nodes_explored: nodes });
        }
    }
    unreachable!("every vertex as its own source always verifies")
}

/// All burning sequences of length exactly `k`, in lexicographic order.
pub fn burning_sequences(g: &Graph, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for_each_tuple(g.order(), k, &mut |t| {
        if verify(g, t) {
            out.push(t.to_vec());
        }
        false
    });
    out
}

/// Visits ordered `k`-tuples of distinct elements of `0..n` lexicographically
/// until the visitor returns true.
fn for_each_tuple(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        n: usize,
        k: usize,
        used: &mut [bool],
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v);
            let stop = rec(n, k, used, cur, visit);
            cur.pop();
            used[v] = false;
            if stop {
                return true;
            }
        }
        false
    }
    if k > n {
        return false;
    }
    rec(n, k, &mut vec![false; n], &mut Vec::with_capacity(k), visit)
}

/// Iterative deepening from [`lower_bound`]. For each `k` a depth-first
/// search places legal sources in order, trying candidates by how many
/// still-uncovered vertices their final ball would add. A branch is cut
/// when even the best remaining balls cannot cover what is left.
///
/// The result, witness included, does not depend on `threads`.
pub fn burning_number_exact(g: &Graph, cfg: &ExactConfig) -> Result<ExactResult, ExactError> {
    let n = g.order();
    if n == 0 {
        return Ok(ExactResult { k: 0, witness: Vec::new(), nodes_explored: 0 });
    }
    let upper = upper_bound_radius(g);
    let lower = lower_bound(g).min(upper);
    let balls = BallTable::new(g, upper);
    let pool = if cfg.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| ExactError::ThreadPool(e.to_string()))?,
        )
    } else {
        None
    };
    let mut nodes = 0u64;
    for k in lower..=upper {
        match solve_k(&balls, k, cfg, &mut nodes, pool.as_ref()) {
            Ok(Some(witness)) => {
                debug_assert!(verify(g, &witness));
                return Ok(ExactResult { k, witness, nodes_explored: nodes });
            }
            Ok(None) => {}
            Err(()) => return Err(ExactError::BudgetExceeded { lower: k, upper, nodes }),
        }
    }
    unreachable!("the radius bound is always attainable")
}

/// `balls[r][v]` is the closed ball of radius `r` around `v`.
struct BallTable {
    n: usize,
    balls: Vec<Vec<FixedBitSet>>,
}

impl BallTable {
    fn new(g: &Graph, max_radius: usize) -> Self {
        let n = g.order();
        let mut balls = vec![vec![FixedBitSet::with_capacity(n); n]; max_radius];
        for v in 0..n {
            for (w, d) in g.bfs(v).into_iter().enumerate() {
                if let Some(d) = d {
                    for layer in balls.iter_mut().skip(d) {
                        layer[v].insert(w);
                    }
                }
            }
        }
        BallTable { n, balls }
    }
}

struct Search<'a> {
    balls: &'a BallTable,
    k: usize,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    /// Vertices burned by the end of step `seq.len()`.
    fn burned_now(&self, seq: &[Vertex]) -> FixedBitSet {
        let t = seq.len();
        let mut b = FixedBitSet::with_capacity(self.balls.n);
        for (i, &x) in seq.iter().enumerate() {
            b.union_with(&self.balls.balls[t - 1 - i][x]);
        }
        b
    }

    /// Candidates for the next source with the number of new vertices each
    /// would cover, best first; `None` if the branch is hopeless.
    fn candidates(&self, seq: &[Vertex], covered: &FixedBitSet) -> Option<Vec<(usize, Vertex)>> {
        let t = seq.len();
        let n = self.balls.n;
        let mut open = covered.clone();
        open.toggle_range(..);
        let need = open.count_ones(..);
        let mut reachable = 0;
        for r in 0..self.k - t {
            let best = self.balls.balls[r].iter().map(|b| b.intersection_count(&open)).max().unwrap_or(0);
            reachable += best;
        }
        if reachable < need {
            return None;
        }
        let burned = self.burned_now(seq);
        let r = self.k - 1 - t;
        let mut cands: Vec<(usize, Vertex)> = (0..n)
            .filter(|&v| !burned.contains(v))
            .map(|v| (self.balls.balls[r][v].intersection_count(&open), v))
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Some(cands)
    }

    fn dfs(&mut self, seq: &mut Vec<Vertex>, covered: &FixedBitSet) -> Result<bool, ()> {
        if covered.is_full() {
            return Ok(self.fill(seq));
        }
        if seq.len() == self.k {
            return Ok(false);
        }
        let Some(cands) = self.candidates(seq, covered) else {
            return Ok(false);
        };
        let r = self.k - 1 - seq.len();
        for (_, v) in cands {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(());
            }
            let mut next = covered.clone();
            next.union_with(&self.balls.balls[r][v]);
            seq.push(v);
            if self.dfs(seq, &next)? {
                return Ok(true);
            }
            seq.pop();
        }
        Ok(false)
    }

    /// Pads a covering prefix with the smallest legal vertex at each step.
    fn fill(&self, seq: &mut Vec<Vertex>) -> bool {
        let start = seq.len();
        while seq.len() < self.k {
            let burned = self.burned_now(seq);
            match (0..self.balls.n).find(|&v| !burned.contains(v)) {
                Some(v) => seq.push(v),
                None => {
                    seq.truncate(start);
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for a burning sequence of length `k`, fanning the root
/// candidates out in chunks of `cfg.threads`. Each root branch runs with the
/// budget left at the start of its chunk, and the first success in
/// candidate order wins, so the outcome is independent of scheduling.
fn solve_k(
    balls: &BallTable,
    k: usize,
    cfg: &ExactConfig,
    nodes: &mut u64,
    pool: Option<&rayon::ThreadPool>,
) -> Result<Option<Vec<Vertex>>, ()> {
    let n = balls.n;
    let root = Search { balls, k, budget: 0, nodes: 0 };
    let empty = FixedBitSet::with_capacity(n);
    let Some(cands) = root.candidates(&[], &empty) else {
        return Ok(None);
    };
    let chunk = cfg.threads.max(1);
    for group in cands.chunks(chunk) {
        let remaining = cfg.node_budget.saturating_sub(*nodes);
        let branch = |&(_, v): &(usize, Vertex)| {
            let mut s = Search { balls, k, budget: remaining.saturating_sub(1), nodes: 0 };
            let mut seq = vec![v];
            let mut covered = empty.clone();
            covered.union_with(&balls.balls[k - 1][v]);
            let res = s.dfs(&mut seq, &covered);
            (res.map(|ok| ok.then_some(seq)), s.nodes + 1)
        };
        let results: Vec<_> = match pool {
            Some(p) => p.install(|| group.par_iter().map(branch).collect()),
            None => group.iter().map(branch).collect(),
        };
        let mut exhausted = false;
        for (res, used) in results {
            *nodes += used;
            match res {
                Ok(Some(seq)) if !exhausted => return Ok(Some(seq)),
                Ok(_) => {}
                Err(()) => exhausted = true,
            }
        }
        if exhausted || *nodes > cfg.node_budget {
            return Err(());
        }
    }
    Ok(None)
}
