//! Seeded random graph families. All functions draw from the given RNG
//! only, so a fixed seed reproduces the same graph.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Interval, Vertex};
use crate::poly::SplitPartition;

/// Erdős–Rényi graph `G(n, p)`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

/// Uniform random recursive tree: vertex `v` attaches to a random earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, edges).expect("simple")
}

/// Random tree plus each remaining pair independently with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let tree = random_tree(rng, n);
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

/// `n` intervals with integer endpoints in `0..=2n`.
pub fn random_intervals<R: Rng>(rng: &mut R, n: usize) -> Vec<Interval> {
    let hi = 2 * n as i64;
    (0..n)
        .map(|_| {
            let a = rng.gen_range(0..hi);
            let len = rng.gen_range(1..=(hi - a).min(n as i64 / 2 + 2));
            Interval::from_integers(a, (a + len).min(hi))
        })
        .collect()
}

/// Random intervals resampled until their intersection graph is connected.
pub fn random_connected_intervals<R: Rng>(rng: &mut R, n: usize) -> Vec<Interval> {
    loop {
        let ivs = random_intervals(rng, n);
        if crate::graph::interval_graph(&ivs).expect("valid intervals").is_connected() {
            return ivs;
        }
    }
}

/// Uniform permutation of `1..=n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

/// Split graph with clique `0..c` for a random `c >= 1`; each independent
/// vertex gets each clique neighbor with probability `p`, and at least one
/// when `connected` is set.
pub fn random_split<R: Rng>(rng: &mut R, n: usize, p: f64, connected: bool) -> (Graph, SplitPartition) {
    let c = rng.gen_range(1..=n.max(1));
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for i in c..n {
        let mut any = false;
        for u in 0..c {
            if rng.gen_bool(p) {
                edges.push((u, i));
                any = true;
            }
        }
        if connected && !any {
            edges.push((rng.gen_range(0..c), i));
        }
    }
    let g = Graph::from_edges(n, edges).expect("simple");
    let sp = SplitPartition { clique: (0..c).collect(), independent: (c..n).collect() };
    (g, sp)
}

/// Cograph built by random unions and joins; the last operation is a join
/// when `connected` is set.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize, connected: bool) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let a = rng.gen_range(1..n);
    let left = random_cograph(rng, a, false);
    let right = random_cograph(rng, n - a, false);
    let shuffled = if connected || rng.gen_bool(0.5) { left.join(&right) } else { left.disjoint_union(&right) };
    relabel(rng, &shuffled)
}

/// Copy of `g` under a uniformly random vertex relabeling.
pub fn relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<Vertex> = (0..g.order()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.order(), g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("simple")
}

/// Connected subtree of `tree` grown from a random vertex, with at least one vertex.
pub fn random_subtree<R: Rng>(rng: &mut R, tree: &Graph) -> Vec<Vertex> {
    let n = tree.order();
    let target = rng.gen_range(1..=n);
    let mut inside = vec![false; n];
    let start = rng.gen_range(0..n);
    inside[start] = true;
    let mut chosen = vec![start];
    while chosen.len() < target {
        let frontier: Vec<Vertex> =
            (0..n).filter(|&v| !inside[v] && tree.neighbors(v).iter().any(|&w| inside[w])).collect();
        let Some(&v) = frontier.choose(rng) else { break };
        inside[v] = true;
        chosen.push(v);
    }
    chosen.sort_unstable();
    chosen
}
