//! Polynomial-time burning for paths, cycles, split graphs, cographs and
//! an additive approximation on interval graphs.

use serde::Serialize;
use thiserror::Error;

use crate::burn::{uncovered, verify};
use crate::exact::ceil_sqrt;
use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("graph has no vertices")]
    Empty,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("graph is not a path")]
    NotAPath,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid split partition: {0}")]
    InvalidSplitPartition(String),
    #[error("graph is not a cograph")]
    NotACograph,
    #[error("no burning sequence of length at most 3 was found")]
    CographSearchFailed,
    #[error("the diameter path does not dominate the graph")]
    DiameterPathNotDominating,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// 0-based positions along a path of order `n` at which to light fires,
/// in burning order. The result has `ceil(sqrt(n))` entries.
pub fn path_positions(n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let k = ceil_sqrt(n);
    let mut rev = Vec::with_capacity(k);
    // Sources from the far end, each one two positions wider than the last.
    for i in 0..k - 1 {
        rev.push(n - i * i - i);
    }
    let span = (k - 1) * (k - 1) + (k - 1);
    rev.push(if n > span { n - span } else { 1 });
    rev.into_iter().rev().map(|p| p - 1).collect()
}

/// Optimal burning sequence of the path whose vertices in order are `path`.
pub fn burn_path(path: &[Vertex]) -> Result<Vec<Vertex>, PolyError> {
    if path.is_empty() {
        return Err(PolyError::Empty);
    }
    Ok(path_positions(path.len()).into_iter().map(|p| path[p]).collect())
}

/// Optimal burning sequence of the cycle whose vertices in cyclic order are `cycle`.
///
/// The path placement is reused, except that the first source may slide
/// within the window of positions that still cover the leftover initial
/// segment; on a cycle the leftmost choice can sit next to a later source
/// across the closing edge.
pub fn burn_cycle(cycle: &[Vertex]) -> Result<Vec<Vertex>, PolyError> {
    let n = cycle.len();
    if n < 3 {
        return Err(PolyError::CycleTooShort(n));
    }
    let mut pos = path_positions(n);
    let k = pos.len();
    let leftover = n - (k - 1) * (k - 1);
    let lo = (leftover + 1).saturating_sub(k).max(1);
    let cyclic = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(n - d)
    };
    let legal = |first: usize, pos: &[usize]| pos[1..].iter().enumerate().all(|(j, &p)| cyclic(first, p) > j);
    if let Some(first) = (lo..=k).rev().map(|v| v - 1).find(|&f| legal(f, &pos)) {
        pos[0] = first;
    }
    Ok(pos.into_iter().map(|p| cycle[p]).collect())
}

/// Vertices of a path graph from its smaller endpoint to the other end.
pub fn path_order(g: &Graph) -> Result<Vec<Vertex>, PolyError> {
    let n = g.order();
    if n == 0 {
        return Err(PolyError::Empty);
    }
    if !(g.is_tree() && g.max_degree() <= 2) {
        return Err(PolyError::NotAPath);
    }
    let start = (0..n).find(|&v| g.degree(v) <= 1).expect("paths have endpoints");
    Ok(walk(g, start, n))
}

/// Vertices of a cycle graph in cyclic order, starting at 0 towards its smaller neighbor.
pub fn cycle_order(g: &Graph) -> Result<Vec<Vertex>, PolyError> {
    let n = g.order();
    if n < 3 {
        return Err(PolyError::CycleTooShort(n));
    }
    if !(g.is_connected() && (0..n).all(|v| g.degree(v) == 2)) {
        return Err(PolyError::NotACycle);
    }
    Ok(walk(g, 0, n))
}

fn walk(g: &Graph, start: Vertex, n: usize) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("walk continues");
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

/// Clique `clique` and independent set `independent` partitioning the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

impl SplitPartition {
    pub fn validate(&self, g: &Graph) -> Result<(), PolyError> {
        let bad = |m: &str| Err(PolyError::InvalidSplitPartition(m.to_string()));
        let mut seen = vec![false; g.order()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= g.order() {
                return bad("vertex out of range");
            }
            if std::mem::replace(&mut seen[v], true) {
                return bad("vertex listed twice");
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("some vertex is in neither part");
        }
        for (i, &u) in self.clique.iter().enumerate() {
            if self.clique[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
                return bad("clique part is not a clique");
            }
        }
        for (i, &u) in self.independent.iter().enumerate() {
            if self.independent[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return bad("independent part has an edge");
            }
        }
        Ok(())
    }
}

/// Split partition read off the degree sequence, or `None` if the graph is not split.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = (1..=n).filter(|&i| g.degree(by_degree[i - 1]) + 1 >= i).max().unwrap_or(0);
    let head: usize = by_degree[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = by_degree[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = by_degree[..m].to_vec();
    let mut independent = by_degree[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let sp = SplitPartition { clique, independent };
    sp.validate(g).ok().map(|_| sp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitOptions {
    /// Use the source preferences that make the result optimal. Without
    /// them every choice is the smallest eligible vertex; the result still
    /// burns the graph but may be longer.
    pub preferences: bool,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions { preferences: true }
    }
}

/// Burning sequence of a split graph. The first source is a clique vertex
/// with the most independent neighbors; later sources are unburned
/// independent vertices out of reach of the current fire, isolated ones
/// first. On connected split graphs the result has length at most 3 and
/// is optimal.
pub fn burn_split(g: &Graph, sp: &SplitPartition, opts: SplitOptions) -> Result<Vec<Vertex>, PolyError> {
    sp.validate(g)?;
    let n = g.order();
    if n == 0 {
        return Err(PolyError::Empty);
    }
    let in_clique = {
        let mut f = vec![false; n];
        sp.clique.iter().for_each(|&v| f[v] = true);
        f
    };
    let first = if sp.clique.is_empty() {
        *sp.independent.iter().min().unwrap()
    } else if opts.preferences {
        let i_degree = |c: Vertex| g.neighbors(c).iter().filter(|&&w| !in_clique[w]).count();
        *sp.clique.iter().min_by(|&&a, &&b| i_degree(b).cmp(&i_degree(a)).then(a.cmp(&b))).unwrap()
    } else {
        *sp.clique.iter().min().unwrap()
    };
    let mut seq = vec![first];
    let mut burned = vec![false; n];
    burned[first] = true;
    let mut count = 1;
    while count < n {
        let reached: Vec<bool> = (0..n).map(|v| burned[v] || g.neighbors(v).iter().any(|&w| burned[w])).collect();
        let mut independent: Vec<Vertex> = sp.independent.iter().copied().filter(|&v| !burned[v]).collect();
        independent.sort_unstable();
        let pick = if opts.preferences {
            let out_of_reach = independent.iter().copied().filter(|&v| !reached[v]);
            out_of_reach
                .clone()
                .find(|&v| g.degree(v) == 0)
                .or_else(|| out_of_reach.clone().next())
                .or_else(|| independent.first().copied())
        } else {
            independent.first().copied()
        };
        let pick = pick.or_else(|| (0..n).find(|&v| in_clique[v] && !burned[v])).expect("an unburned vertex exists");
        seq.push(pick);
        for v in 0..n {
            if !burned[v] && (reached[v] || v == pick) {
                burned[v] = true;
                count += 1;
            }
        }
    }
    Ok(seq)
}

/// Recursive decomposition test: every induced subgraph on two or more
/// vertices is disconnected or has a disconnected complement.
pub fn is_cograph(g: &Graph) -> bool {
    if g.order() <= 1 {
        return true;
    }
    let comps = g.components();
    if comps.len() > 1 {
        return comps.iter().all(|c| is_cograph(&g.induced_subgraph(c)));
    }
    let co = g.complement();
    let co_comps = co.components();
    co_comps.len() > 1 && co_comps.iter().all(|c| is_cograph(&co.induced_subgraph(c)))
}

/// Burning sequence of a connected cograph, of length at most 3.
pub fn burn_cograph(g: &Graph) -> Result<Vec<Vertex>, PolyError> {
    let n = g.order();
    if n == 0 {
        return Err(PolyError::Empty);
    }
    if !g.is_connected() {
        return Err(PolyError::Disconnected);
    }
    if !is_cograph(g) {
        return Err(PolyError::NotACograph);
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    for x1 in 0..n {
        let reach = g.neighborhood(&[x1], 1);
        let missing: Vec<Vertex> = (0..n).filter(|v| reach.binary_search(v).is_err()).collect();
        match missing.len() {
            0 => return Ok(vec![x1, if x1 == 0 { 1 } else { 0 }]),
            1 => return Ok(vec![x1, missing[0]]),
            _ => {}
        }
    }
    let x1 = (0..n).find(|&v| g.eccentricity(v).is_some_and(|e| e <= 2)).ok_or(PolyError::CographSearchFailed)?;
    let near = g.neighborhood(&[x1], 1);
    let x2 = (0..n).find(|v| near.binary_search(v).is_err()).ok_or(PolyError::CographSearchFailed)?;
    let x3 = (0..n).find(|&v| v != x2 && near.binary_search(&v).is_err()).ok_or(PolyError::CographSearchFailed)?;
    let seq = vec![x1, x2, x3];
    if verify(g, &seq) {
        Ok(seq)
    } else {
        Err(PolyError::CographSearchFailed)
    }
}

/// Burns a diameter path optimally and, if some vertex is still outside
/// every ball, lights one such vertex last. On connected interval graphs
/// the length exceeds the burning number by at most one.
pub fn burn_interval_approx(g: &Graph) -> Result<Vec<Vertex>, PolyError> {
    if g.order() == 0 {
        return Err(PolyError::Empty);
    }
    if !g.is_connected() {
        return Err(PolyError::Disconnected);
    }
    let path = g.diameter_path()?;
    let mut seq = burn_path(&path)?;
    if let Some(&v) = uncovered(g, &seq).first() {
        seq.push(v);
    }
    if verify(g, &seq) {
        Ok(seq)
    } else {
        Err(PolyError::DiameterPathNotDominating)
    }
}
