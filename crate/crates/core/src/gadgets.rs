//! Spiders, distinct 3-partition instances and the interval, permutation
//! and disk gadgets built from them, each with a checkable certificate.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::burn::verify;
use crate::exact::ceil_sqrt;
use crate::graph::{disk_graph, permutation_graph, Disk, Graph, Interval, Vertex};

/// Largest instance accepted by [`solve_d3p_bruteforce`] unless overridden.
pub const D3P_BRUTEFORCE_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("instance is empty")]
    Empty,
    #[error("instance size {0} is not a multiple of 3")]
    NotMultipleOfThree(usize),
    #[error("elements must be positive")]
    NonPositive,
    #[error("element {0} appears more than once")]
    Duplicate(u64),
    #[error("sum {sum} is not divisible by {n}")]
    SumNotDivisible { sum: u64, n: usize },
    #[error("element {element} is not strictly between B/4 and B/2 for B = {b}")]
    OutOfRange { element: u64, b: u64 },
    #[error("instance of size {size} exceeds the enumeration cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("the given triples are not a 3-partition of the instance")]
    InvalidSolution,
    #[error("q = {q} must lie in [{lo}, {hi}]")]
    QOutOfRange { q: usize, lo: usize, hi: usize },
    #[error("component {index} needs degree at least {min}, got {degree}")]
    DegreeTooSmall { index: usize, degree: usize, min: usize },
    #[error("could not place the disks exactly")]
    Geometry,
}

/// Spider `SP(s, r)`: head 0 with `s` arms of `r` vertices; arm `i`
/// (from 0) holds vertices `1 + i*r ..= (i+1)*r`, nearest the head first.
pub fn gen_spider(s: usize, r: usize) -> Graph {
    let mut edges = Vec::with_capacity(s * r);
    for i in 0..s {
        let base = 1 + i * r;
        for j in 0..r {
            edges.push((if j == 0 { 0 } else { base + j - 1 }, base + j));
        }
    }
    Graph::from_edges(1 + s * r, edges).expect("spider edges are simple")
}

/// Disjoint union of `SP(d_i, i - 1)` for `i = 1, 2, ...`, requiring `d_i >= i + 1`.
pub fn gen_spider_forest(degrees: &[usize]) -> Result<Graph, GadgetError> {
    let mut g = Graph::empty(0);
    for (idx, &d) in degrees.iter().enumerate() {
        let i = idx + 1;
        if d < i + 1 {
            return Err(GadgetError::DegreeTooSmall { index: i, degree: d, min: i + 1 });
        }
        g = g.disjoint_union(&gen_spider(d, i - 1));
    }
    Ok(g)
}

/// A distinct 3-partition instance `X` with its derived parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct D3PInstance {
    /// Elements in increasing order.
    pub elements: Vec<u64>,
    /// Number of triples, `|X| / 3`.
    pub n: usize,
    /// Largest element.
    pub m: u64,
    /// Target triple sum.
    pub b: u64,
    /// `m - 3n`, the number of odd values below `2m` not of the form `2a - 1`.
    pub k: usize,
    /// `2a - 1` for each element, increasing.
    pub x_prime: Vec<u64>,
    /// `2B - 3`, the sum of a transformed triple.
    pub b_prime: u64,
    /// The first `m` odd numbers minus `x_prime`, increasing.
    pub y: Vec<u64>,
}

impl D3PInstance {
    pub fn new(elements: &[u64]) -> Result<Self, GadgetError> {
        if elements.is_empty() {
            return Err(GadgetError::Empty);
        }
        if !elements.len().is_multiple_of(3) {
            return Err(GadgetError::NotMultipleOfThree(elements.len()));
        }
        let mut xs = elements.to_vec();
        xs.sort_unstable();
        if xs[0] == 0 {
            return Err(GadgetError::NonPositive);
        }
        if let Some(w) = xs.windows(2).find(|w| w[0] == w[1]) {
            return Err(GadgetError::Duplicate(w[0]));
        }
        let n = xs.len() / 3;
        let sum: u64 = xs.iter().sum();
        if !sum.is_multiple_of(n as u64) {
            return Err(GadgetError::SumNotDivisible { sum, n });
        }
        let b = sum / n as u64;
        if let Some(&a) = xs.iter().find(|&&a| !(b < 4 * a && 2 * a < b)) {
            return Err(GadgetError::OutOfRange { element: a, b });
        }
        let m = *xs.last().unwrap();
        let x_prime: Vec<u64> = xs.iter().map(|a| 2 * a - 1).collect();
        let y: Vec<u64> = (1..=m).map(|i| 2 * i - 1).filter(|v| x_prime.binary_search(v).is_err()).collect();
        Ok(D3PInstance { n, m, b, k: y.len(), b_prime: 2 * b - 3, elements: xs, x_prime, y })
    }

    /// `Y` in decreasing order.
    pub fn y_descending(&self) -> Vec<u64> {
        self.y.iter().rev().copied().collect()
    }
}

pub type Triple = [u64; 3];

/// True when `parts` splits the instance into `n` triples each summing to `B`.
pub fn check_d3p_solution(inst: &D3PInstance, parts: &[Triple]) -> bool {
    if parts.len() != inst.n || parts.iter().any(|t| t.iter().sum::<u64>() != inst.b) {
        return false;
    }
    let mut all: Vec<u64> = parts.iter().flatten().copied().collect();
    all.sort_unstable();
    all == inst.elements
}

/// Lexicographically first 3-partition, each triple increasing.
pub fn solve_d3p_bruteforce(inst: &D3PInstance, cap: usize) -> Result<Option<Vec<Triple>>, GadgetError> {
    let xs = &inst.elements;
    if xs.len() > cap {
        return Err(GadgetError::TooLarge { size: xs.len(), cap });
    }
    fn rec(xs: &[u64], b: u64, used: &mut [bool], parts: &mut Vec<Triple>) -> bool {
        let Some(i) = used.iter().position(|u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..xs.len() {
            if used[j] {
                continue;
            }
            used[j] = true;
            for l in j + 1..xs.len() {
                if !used[l] && xs[i] + xs[j] + xs[l] == b {
                    used[l] = true;
                    parts.push([xs[i], xs[j], xs[l]]);
                    if rec(xs, b, used, parts) {
                        return true;
                    }
                    parts.pop();
                    used[l] = false;
                }
            }
            used[j] = false;
        }
        used[i] = false;
        false
    }
    let mut parts = Vec::new();
    let found = rec(xs, inst.b, &mut vec![false; xs.len()], &mut parts);
    Ok(found.then_some(parts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    /// Caterpillar interval graph.
    Ig,
    /// Path-forest permutation graph.
    Pg,
    /// Spider-with-tails disk graph.
    Dk,
}

/// Named subpath, vertices in path order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subpath {
    pub name: String,
    pub vertices: Vec<Vertex>,
}

/// Pendant vertices hung one each on the inner vertices of a spine subpath.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comb {
    pub name: String,
    pub spine: String,
    pub teeth: Vec<Vertex>,
}

/// How `lower_bound` was certified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum LowerBoundWitness {
    /// An isometric path of this order needs `ceil(sqrt(order))` sources.
    IsometricPath { order: usize },
    /// Exhaustive cluster assignment shows the path forest with these
    /// component orders cannot be burned with one source fewer.
    PathForest { orders: Vec<usize> },
    /// `terminals` vertices pairwise at distance at least `min_distance`.
    Packing { terminals: usize, min_distance: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParameters {
    pub n: usize,
    pub m: u64,
    pub b: u64,
    pub k: usize,
    pub b_prime: u64,
    pub x_prime: Vec<u64>,
    pub y: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<usize>,
    /// Central disk radius as a reduced fraction.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub central_radius: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCertificate {
    pub kind: GadgetKind,
    pub elements: Vec<u64>,
    pub parameters: GadgetParameters,
    pub order: usize,
    pub size: usize,
    /// Burning number of the gadget when the instance is a yes-instance.
    pub claimed_k: usize,
    pub lower_bound: usize,
    pub lower_bound_witness: LowerBoundWitness,
    pub name_table: BTreeMap<String, Vertex>,
    pub spine: Vec<Vertex>,
    pub decomposition: Vec<Subpath>,
    pub combs: Vec<Comb>,
    pub solution: Option<Vec<Triple>>,
    pub canonical_sequence: Option<Vec<Vertex>>,
    #[serde(skip)]
    pub graph: Graph,
}

impl GadgetCertificate {
    /// The canonical sequence exists, has `claimed_k` sources and burns the graph.
    pub fn canonical_verifies(&self) -> bool {
        self.canonical_sequence.as_ref().is_some_and(|s| s.len() == self.claimed_k && verify(&self.graph, s))
    }
}

/// Burning with radii `0..k` on a path forest reduces to covering: each
/// component of order `L` needs clusters of total size at least `L`, a
/// cluster of radius `r` having `2r + 1` vertices. Exhaustive search.
pub fn path_forest_burnable(orders: &[usize], k: usize) -> bool {
    let mut need: Vec<usize> = orders.iter().copied().filter(|&o| o > 0).collect();
    need.sort_unstable_by(|a, b| b.cmp(a));
    fn rec(r: usize, need: &mut [usize], left: usize) -> bool {
        let open: usize = need.iter().sum();
        if open == 0 {
            return true;
        }
        // clusters of radius r, r-1, ..., 0 remain: total (r+1)^2 vertices
        if left < open {
            return false;
        }
        let size = 2 * r + 1;
        let rest = left - size;
        for i in 0..need.len() {
            if need[i] == 0 || need[..i].contains(&need[i]) {
                continue;
            }
            let before = need[i];
            need[i] = before.saturating_sub(size);
            let ok = r > 0 && rec(r - 1, need, rest) || r == 0 && need.iter().all(|&x| x == 0);
            need[i] = before;
            if ok {
                return true;
            }
        }
        false
    }
    if need.is_empty() {
        return true;
    }
    k > 0 && rec(k - 1, &mut need, k * k)
}

/// Burning number of a path forest with the given component orders.
pub fn path_forest_burning_number(orders: &[usize]) -> usize {
    let total: usize = orders.iter().sum();
    (ceil_sqrt(total)..).find(|&k| path_forest_burnable(orders, k)).expect("one source per vertex suffices")
}

/// `b(G) >= ceil(sqrt(|P|))` when `path` is a geodesic of `g`.
pub fn isometric_path_bound(g: &Graph, path: &[Vertex]) -> Option<usize> {
    let first = *path.first()?;
    let consecutive = path.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let geodesic = g.distance(first, *path.last().unwrap()) == Some(path.len() - 1);
    (consecutive && geodesic).then(|| ceil_sqrt(path.len()))
}

/// With `terminals` pairwise at distance at least `D`, a ball of radius
/// below `D / 2` holds at most one of them, so
/// `b(G) >= min(|terminals|, ceil(D / 2) + 1)`. Returns the bound and `D`.
pub fn packing_bound(g: &Graph, terminals: &[Vertex]) -> (usize, usize) {
    let mut min_d = usize::MAX;
    for (i, &t) in terminals.iter().enumerate() {
        let dist = g.bfs(t);
        for &u in &terminals[i + 1..] {
            min_d = min_d.min(dist[u].unwrap_or(usize::MAX));
        }
    }
    if terminals.len() < 2 {
        return (terminals.len(), min_d);
    }
    let bound = if min_d == usize::MAX { terminals.len() } else { terminals.len().min(min_d.div_ceil(2) + 1) };
    (bound, min_d)
}

fn parameters(inst: &D3PInstance) -> GadgetParameters {
    GadgetParameters {
        n: inst.n,
        m: inst.m,
        b: inst.b,
        k: inst.k,
        b_prime: inst.b_prime,
        x_prime: inst.x_prime.clone(),
        y: inst.y.clone(),
        ..GadgetParameters::default()
    }
}

fn checked_solution(inst: &D3PInstance, solution: Option<&[Triple]>) -> Result<Option<Vec<Triple>>, GadgetError> {
    match solution {
        Some(s) if !check_d3p_solution(inst, s) => Err(GadgetError::InvalidSolution),
        Some(s) => Ok(Some(
            s.iter()
                .map(|t| {
                    let mut t = *t;
                    t.sort_unstable();
                    t
                })
                .collect(),
        )),
        None => Ok(None),
    }
}

/// Splits each of the first `n` paths into three consecutive pieces sized
/// `2a - 1` for the elements `a` of its triple, keeps the rest whole, and
/// returns the middle vertex of every piece, largest piece first.
fn piece_middles(paths: &[&[Vertex]], solution: &[Triple], extra: &[&[Vertex]]) -> Vec<Vertex> {
    let mut pieces: Vec<&[Vertex]> = Vec::new();
    for (path, triple) in paths.iter().zip(solution) {
        let mut rest: &[Vertex] = path;
        for &a in triple {
            let (head, tail) = rest.split_at((2 * a - 1) as usize);
            pieces.push(head);
            rest = tail;
        }
        debug_assert!(rest.is_empty());
    }
    pieces.extend_from_slice(&paths[solution.len()..]);
    pieces.extend_from_slice(extra);
    pieces.sort_by_key(|p| std::cmp::Reverse(p.len()));
    pieces.iter().map(|p| p[p.len() / 2]).collect()
}

/// Output of [`gen_ig_gadget`]: the certificate and an interval model of the graph.
#[derive(Debug, Clone)]
pub struct IntervalGadget {
    pub certificate: GadgetCertificate,
    pub intervals: Vec<Interval>,
}

/// Caterpillar interval graph on `7m^2 + 6m` vertices. Its spine of order
/// `(2m + 1)^2` concatenates `n` paths of order `B'`, the paths of order
/// `Y` (decreasing), and `m + 1` paths `T_j` of order `4m + 3 - 2j`
/// interleaved as `Q_1 T_1 .. Q_n T_n Q'_1 T_{n+1} .. Q'_k T_{n+k} .. T_{m+1}`.
/// Every inner vertex of every `T_j` carries one pendant.
pub fn gen_ig_gadget(inst: &D3PInstance, solution: Option<&[Triple]>) -> Result<IntervalGadget, GadgetError> {
    let solution = checked_solution(inst, solution)?;
    let m = inst.m as usize;
    let n = inst.n;
    let y_desc = inst.y_descending();
    // (name, order), in spine order
    let mut segments: Vec<(String, usize)> = Vec::new();
    let t_len = |j: usize| 4 * m + 3 - 2 * j;
    for i in 1..=n {
        segments.push((format!("Q{i}"), inst.b_prime as usize));
        segments.push((format!("T{i}"), t_len(i)));
    }
    for (j, &y) in y_desc.iter().enumerate() {
        segments.push((format!("Q'{}", j + 1), y as usize));
        segments.push((format!("T{}", n + j + 1), t_len(n + j + 1)));
    }
    for j in n + inst.k + 1..=m + 1 {
        segments.push((format!("T{j}"), t_len(j)));
    }
    let spine_len: usize = segments.iter().map(|s| s.1).sum();
    let mut name_table = BTreeMap::new();
    let mut decomposition = Vec::new();
    let mut edges = Vec::new();
    let mut pos = 0;
    for (name, len) in &segments {
        let vertices: Vec<Vertex> = (pos..pos + len).collect();
        for (h, &v) in vertices.iter().enumerate() {
            name_table.insert(format!("{name}.{}", h + 1), v);
        }
        decomposition.push(Subpath { name: name.clone(), vertices });
        pos += len;
    }
    edges.extend((1..spine_len).map(|v| (v - 1, v)));
    let mut intervals: Vec<Interval> = (0..spine_len as i64).map(|p| Interval::from_integers(p, p + 1)).collect();
    let third = |num: i64| BigRational::new(BigInt::from(num), BigInt::from(3));
    let mut combs = Vec::new();
    let mut next = spine_len;
    for sp in decomposition.iter().filter(|s| s.name.starts_with('T')) {
        let j = &sp.name[1..];
        let mut teeth = Vec::new();
        for (h, &v) in sp.vertices.iter().enumerate().take(sp.vertices.len() - 1).skip(1) {
            edges.push((v, next));
            name_table.insert(format!("A{j}.{}", h + 1), next);
            let p = v as i64;
            intervals.push(Interval::new(third(3 * p + 1), third(3 * p + 2)));
            teeth.push(next);
            next += 1;
        }
        combs.push(Comb { name: format!("A{j}"), spine: sp.name.clone(), teeth });
    }
    let graph = Graph::from_edges(next, edges).expect("caterpillar edges are simple");
    let spine: Vec<Vertex> = (0..spine_len).collect();
    let canonical_sequence = solution.as_ref().map(|sol| {
        let q: Vec<&[Vertex]> =
            decomposition.iter().filter(|s| s.name.starts_with('Q')).map(|s| s.vertices.as_slice()).collect();
        let t: Vec<&[Vertex]> =
            decomposition.iter().filter(|s| s.name.starts_with('T')).map(|s| s.vertices.as_slice()).collect();
        piece_middles(&q, sol, &t)
    });
    let lower_bound = isometric_path_bound(&graph, &spine).expect("the spine of a caterpillar is a geodesic");
    let certificate = GadgetCertificate {
        kind: GadgetKind::Ig,
        elements: inst.elements.clone(),
        parameters: parameters(inst),
        order: graph.order(),
        size: graph.size(),
        claimed_k: 2 * m + 1,
        lower_bound,
        lower_bound_witness: LowerBoundWitness::IsometricPath { order: spine_len },
        name_table,
        spine,
        decomposition,
        combs,
        solution,
        canonical_sequence,
        graph,
    };
    Ok(IntervalGadget { certificate, intervals })
}

/// Block permutation on `x..=y` whose permutation graph is a path.
pub fn block_permutation(x: usize, y: usize) -> Vec<usize> {
    let t = y - x + 1;
    match t {
        1 => vec![x],
        2 => vec![y, x],
        3 => vec![y, x, x + 1],
        4 => vec![x + 1, y, x, x + 2],
        _ => (1..=t)
            .map(|i| match i {
                2 => x,
                _ if i % 2 == 0 => x + i - 3,
                _ if t.is_multiple_of(2) && i == t - 1 => y,
                _ if t % 2 == 1 && i == t => y - 1,
                _ => x + i + 1,
            })
            .collect(),
    }
}

/// Output of [`gen_pg_gadget`]: the permutation of `1..=m^2` and the certificate.
#[derive(Debug, Clone)]
pub struct PermutationGadget {
    pub permutation: Vec<usize>,
    pub certificate: GadgetCertificate,
}

/// Permutation graph on `1..=m^2` that is a disjoint union of paths of
/// orders `B'` (`n` times) and the elements of `Y` (decreasing), each on a
/// contiguous block of values.
pub fn gen_pg_gadget(inst: &D3PInstance, solution: Option<&[Triple]>) -> Result<PermutationGadget, GadgetError> {
    let solution = checked_solution(inst, solution)?;
    let sizes: Vec<usize> = std::iter::repeat_n(inst.b_prime as usize, inst.n)
        .chain(inst.y_descending().into_iter().map(|y| y as usize))
        .collect();
    let mut permutation = Vec::new();
    let mut blocks = Vec::new();
    let mut y = 0;
    for &s in &sizes {
        let x = y + 1;
        y = x + s - 1;
        permutation.extend(block_permutation(x, y));
        blocks.push((x, y));
    }
    let graph = permutation_graph(&permutation).expect("blocks form a permutation");
    let mut name_table = BTreeMap::new();
    for v in 0..graph.order() {
        name_table.insert(format!("v{}", v + 1), v);
    }
    let decomposition: Vec<Subpath> = blocks
        .iter()
        .enumerate()
        .map(|(j, &(x, y))| Subpath { name: format!("Q{}", j + 1), vertices: block_path(&graph, x - 1, y - 1) })
        .collect();
    let canonical_sequence = solution.as_ref().map(|sol| {
        let paths: Vec<&[Vertex]> = decomposition.iter().map(|s| s.vertices.as_slice()).collect();
        piece_middles(&paths, sol, &[])
    });
    let orders: Vec<usize> = decomposition.iter().map(|s| s.vertices.len()).collect();
    let m = inst.m as usize;
    let lower_bound = path_forest_burning_number(&orders);
    let certificate = GadgetCertificate {
        kind: GadgetKind::Pg,
        elements: inst.elements.clone(),
        parameters: parameters(inst),
        order: graph.order(),
        size: graph.size(),
        claimed_k: m,
        lower_bound,
        lower_bound_witness: LowerBoundWitness::PathForest { orders },
        name_table,
        spine: Vec::new(),
        decomposition,
        combs: Vec::new(),
        solution,
        canonical_sequence,
        graph,
    };
    Ok(PermutationGadget { permutation, certificate })
}

/// Vertices `lo..=hi` of a path component, walked from its smaller endpoint.
fn block_path(g: &Graph, lo: Vertex, hi: Vertex) -> Vec<Vertex> {
    let start = (lo..=hi).find(|&v| g.degree(v) <= 1).expect("a path has an endpoint");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while order.len() < hi - lo + 1 {
        let cur = *order.last().unwrap();
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("path continues");
        prev = cur;
        order.push(next);
    }
    order
}

/// Output of [`gen_dk_gadget`]: disks in vertex order and the certificate.
#[derive(Debug, Clone)]
pub struct DiskGadget {
    pub disks: Vec<Disk>,
    pub certificate: GadgetCertificate,
}

/// Unit disk graph: the spider `SP(q, m)` with head `h` (vertex 0) plus a
/// tail path behind the tip of each of the first `n + k` arms, of order
/// `B'` for the first `n` and the elements of `Y` (decreasing) after.
///
/// Geometry: the head is a disk of radius `R = R' + 1/2` at the origin and
/// every other disk has radius 1. Arm `i` runs along an exactly unit
/// rational direction near angle `2 pi i / q`, its disks centered at
/// distances `R' + 1 + 3t/2`. `R'` is the least half-integer for which
/// neighbouring arms stay clear of each other; the result is checked
/// exactly against the combinatorial graph.
pub fn gen_dk_gadget(inst: &D3PInstance, q: usize, solution: Option<&[Triple]>) -> Result<DiskGadget, GadgetError> {
    let solution = checked_solution(inst, solution)?;
    let m = inst.m as usize;
    let p = m - 1;
    let (lo, hi) = (2 * (p + 2), 3 * p);
    if q < lo || q > hi {
        return Err(GadgetError::QOutOfRange { q, lo, hi });
    }
    let tails: Vec<usize> = std::iter::repeat_n(inst.b_prime as usize, inst.n)
        .chain(inst.y_descending().into_iter().map(|y| y as usize))
        .collect();
    let arm_vertex = |i: usize, t: usize| 1 + i * (p + 1) + t;
    let mut tail_start = Vec::new();
    let mut next = 1 + q * (p + 1);
    for &len in &tails {
        tail_start.push(next);
        next += len;
    }
    let order = next;
    let mut edges = Vec::new();
    for i in 0..q {
        edges.push((0, arm_vertex(i, 0)));
        for t in 1..=p {
            edges.push((arm_vertex(i, t - 1), arm_vertex(i, t)));
        }
    }
    for (i, &len) in tails.iter().enumerate() {
        edges.push((arm_vertex(i, p), tail_start[i]));
        for h in 1..len {
            edges.push((tail_start[i] + h - 1, tail_start[i] + h));
        }
    }
    let expected = Graph::from_edges(order, edges).expect("gadget edges are simple");

    let half = |v: i64| BigRational::new(BigInt::from(v), BigInt::from(2));
    let first_guess = (1.0 / (PI / q as f64).sin() - 1.0) * 2.0;
    let mut r_halves = first_guess.floor() as i64 + 1;
    let directions: Vec<(BigRational, BigRational)> =
        (0..q).map(|i| unit_direction(2.0 * PI * i as f64 / q as f64)).collect();
    for _ in 0..8 {
        let r_prime = half(r_halves);
        let mut disks = vec![Disk { x: half(0), y: half(0), radius: &r_prime + half(1) }];
        let radius = half(2);
        let place = |i: usize, t: usize, disks: &mut Vec<Disk>| {
            let dist = &r_prime + half(2) + half(3 * t as i64);
            let (ux, uy) = &directions[i];
            disks.push(Disk { x: ux * &dist, y: uy * &dist, radius: radius.clone() });
        };
        for i in 0..q {
            for t in 0..=p {
                place(i, t, &mut disks);
            }
        }
        for (i, &len) in tails.iter().enumerate() {
            for h in 0..len {
                place(i, p + 1 + h, &mut disks);
            }
        }
        let graph = disk_graph(&disks).expect("radii are positive");
        if graph != expected {
            r_halves += 1;
            continue;
        }
        let mut name_table = BTreeMap::new();
        name_table.insert("h".to_string(), 0);
        for i in 0..q {
            name_table.insert(format!("c{}", i + 1), arm_vertex(i, 0));
            for t in 1..=p {
                name_table.insert(format!("c{}^{t}", i + 1), arm_vertex(i, t));
            }
        }
        let mut decomposition = Vec::new();
        for (i, &len) in tails.iter().enumerate() {
            let vertices: Vec<Vertex> = (tail_start[i]..tail_start[i] + len).collect();
            for (h, &v) in vertices.iter().enumerate() {
                name_table.insert(format!("P{}.{}", i + 1, h + 1), v);
            }
            decomposition.push(Subpath { name: format!("P{}", i + 1), vertices });
        }
        let canonical_sequence = solution.as_ref().map(|sol| {
            let paths: Vec<&[Vertex]> = decomposition.iter().map(|s| s.vertices.as_slice()).collect();
            let mut seq = vec![0];
            seq.extend(piece_middles(&paths, sol, &[]));
            seq
        });
        let tips: Vec<Vertex> = (0..q).map(|i| arm_vertex(i, p)).collect();
        let (lower_bound, min_distance) = packing_bound(&graph, &tips);
        let mut params = parameters(inst);
        params.q = Some(q);
        params.p = Some(p);
        params.central_radius = Some(disks[0].radius.to_string());
        let certificate = GadgetCertificate {
            kind: GadgetKind::Dk,
            elements: inst.elements.clone(),
            parameters: params,
            order,
            size: graph.size(),
            claimed_k: m + 1,
            lower_bound,
            lower_bound_witness: LowerBoundWitness::Packing { terminals: q, min_distance },
            name_table,
            spine: Vec::new(),
            decomposition,
            combs: Vec::new(),
            solution,
            canonical_sequence,
            graph,
        };
        return Ok(DiskGadget { disks, certificate });
    }
    Err(GadgetError::Geometry)
}

/// Exactly unit rational vector near angle `theta`, from the rational
/// parametrization of the circle at a dyadic `tan` of the half angle.
fn unit_direction(theta: f64) -> (BigRational, BigRational) {
    let theta = theta.rem_euclid(2.0 * PI);
    let theta = if theta > PI { theta - 2.0 * PI } else { theta };
    let (phi, flip) = if theta > FRAC_PI_2 {
        (theta - PI, true)
    } else if theta < -FRAC_PI_2 {
        (theta + PI, true)
    } else {
        (theta, false)
    };
    const DEN: i64 = 1 << 20;
    let t = ((phi / 2.0).tan() * DEN as f64).round() as i64;
    let d = BigInt::from(DEN * DEN + t * t);
    let cx = BigRational::new(BigInt::from(DEN * DEN - t * t), d.clone());
    let cy = BigRational::new(BigInt::from(2 * t * DEN), d);
    if flip {
        (-cx, -cy)
    } else {
        (cx, cy)
    }
}
