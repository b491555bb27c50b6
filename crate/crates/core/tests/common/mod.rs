//! Fixtures and naive oracles shared by the integration tests. The oracles
//! work on plain vertex sets and do not call into the library's solvers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_burning::Graph;

/// Eight-vertex example graph on `p q r s t u v w` (vertices 0..8).
pub fn letter_graph() -> Graph {
    Graph::from_edges(8, [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (4, 6), (3, 5), (3, 6), (6, 7)]).unwrap()
}

pub const P: usize = 0;
pub const Q: usize = 1;
pub const R: usize = 2;
pub const S: usize = 3;
pub const T: usize = 4;
pub const U: usize = 5;
pub const V: usize = 6;
pub const W: usize = 7;

/// All-pairs distances by Floyd–Warshall; `usize::MAX` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![usize::MAX; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != usize::MAX && d[k][j] != usize::MAX && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Step-by-step burning with sets: `(all placements legal, everything burned)`.
pub fn naive_burn(g: &Graph, seq: &[usize]) -> (bool, bool) {
    let mut burned: BTreeSet<usize> = BTreeSet::new();
    let mut legal = true;
    for &x in seq {
        let mut next = burned.clone();
        for &b in &burned {
            next.extend(g.neighbors(b).iter().copied());
        }
        if x >= g.order() || burned.contains(&x) {
            legal = false;
        } else {
            next.insert(x);
        }
        burned = next;
    }
    (legal, burned.len() == g.order())
}

pub fn naive_is_burning_sequence(g: &Graph, seq: &[usize]) -> bool {
    naive_burn(g, seq) == (true, true)
}

/// Smallest k admitting a burning sequence, by enumerating all k-tuples.
pub fn naive_burning_number(g: &Graph) -> usize {
    let n = g.order();
    (1..=n)
        .find(|&k| {
            let mut tuple = vec![0; k];
            loop {
                if naive_is_burning_sequence(g, &tuple) {
                    return true;
                }
                let mut i = k;
                loop {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    tuple[i] += 1;
                    if tuple[i] < n {
                        break;
                    }
                    tuple[i] = 0;
                }
            }
        })
        .expect("n sources always suffice")
}

/// Firefighter by set updates; `None` on an illegal placement, else the saved count.
pub fn naive_firefight(g: &Graph, origin: usize, placements: &[usize]) -> Option<usize> {
    let mut burned = BTreeSet::from([origin]);
    let mut protected = BTreeSet::new();
    let mut i = 0;
    loop {
        if let Some(&f) = placements.get(i) {
            if f >= g.order() || burned.contains(&f) || !protected.insert(f) {
                return None;
            }
        }
        let spread: BTreeSet<usize> = burned
            .iter()
            .flat_map(|&b| g.neighbors(b).iter().copied())
            .filter(|v| !burned.contains(v) && !protected.contains(v))
            .collect();
        i += 1;
        if spread.is_empty() && i >= placements.len() {
            return Some(g.order() - burned.len());
        }
        burned.extend(spread);
    }
}

/// Whether some induced path of `k` vertices exists, by extending simple paths.
pub fn has_induced_path(g: &Graph, k: usize) -> bool {
    fn extend(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            let ok = !path.contains(&w) && path[..path.len() - 1].iter().all(|&p| !g.has_edge(p, w));
            if ok {
                path.push(w);
                if extend(g, path, k) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    k == 0 || (0..g.order()).any(|v| extend(g, &mut vec![v], k))
}
