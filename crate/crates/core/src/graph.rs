//! Simple undirected graphs with distance queries, plus the interval,
//! permutation and disk-intersection constructions.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("interval {0} does not satisfy start < end")]
    DegenerateInterval(usize),
    #[error("disk {0} has a non-positive radius")]
    NonPositiveRadius(usize),
    #[error("sequence is not a permutation of 1..={0}")]
    NotAPermutation(usize),
}

/// Adjacency-list graph on vertices `0..order`. Neighbor lists are sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    size: usize,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Graph { adj: vec![Vec::new(); order], size: 0 }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); order];
        let mut size = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            size += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, size })
    }

    pub fn path(order: usize) -> Self {
        let edges = (1..order).map(|i| (i - 1, i));
        Graph::from_edges(order, edges).expect("path edges are simple")
    }

    pub fn cycle(order: usize) -> Result<Self, GraphError> {
        if order < 3 {
            return Err(GraphError::CycleTooSmall(order));
        }
        let edges = (0..order).map(|i| (i, (i + 1) % order));
        Graph::from_edges(order, edges)
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
        Graph::from_edges(order, edges).expect("complete graph edges are simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are simple")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<usize>> {
        self.multi_source_bfs(std::slice::from_ref(&source))
    }

    pub fn multi_source_bfs(&self, sources: &[Vertex]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.bfs(u)[v]
    }

    /// Closed `radius`-neighborhood of a vertex set, sorted.
    pub fn neighborhood(&self, set: &[Vertex], radius: usize) -> Vec<Vertex> {
        let mut seen = vec![false; self.order()];
        let mut frontier = Vec::new();
        for &s in set {
            if !seen[s] {
                seen[s] = true;
                frontier.push(s);
            }
        }
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        (0..self.order()).filter(|&v| seen[v]).collect()
    }

    /// Closed ball of the given radius around `v` as a bit set.
    pub fn ball(&self, v: Vertex, radius: usize) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        for (w, d) in self.bfs(v).into_iter().enumerate() {
            if d.is_some_and(|d| d <= radius) {
                set.insert(w);
            }
        }
        set
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut label = vec![usize::MAX; self.order()];
        let mut comps = Vec::new();
        for s in 0..self.order() {
            if label[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut comp = vec![s];
            label[s] = id;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = id;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.size + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.size + 1 == self.order() && self.is_connected()
    }

    /// Every component is a path (isolated vertices included).
    pub fn is_path_forest(&self) -> bool {
        self.is_forest() && self.adj.iter().all(|a| a.len() <= 2)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `None` if some vertex is unreachable from `v`.
    pub fn eccentricity(&self, v: Vertex) -> Option<usize> {
        self.bfs(v).into_iter().try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Radius of a connected graph; `None` when empty or disconnected.
    pub fn radius(&self) -> Option<usize> {
        (0..self.order())
            .map(|v| self.eccentricity(v))
            .try_fold(None, |acc: Option<usize>, e| e.map(|e| Some(acc.map_or(e, |a| a.min(e)))))?
    }

    /// Lexicographically smallest shortest path from `s` to `t`.
    pub fn shortest_path(&self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        let to_t = self.bfs(t);
        let mut d = to_t[s]?;
        let mut path = vec![s];
        let mut cur = s;
        while d > 0 {
            cur = *self.adj[cur].iter().find(|&&w| to_t[w] == Some(d - 1))?;
            path.push(cur);
            d -= 1;
        }
        Some(path)
    }

    /// A longest shortest path of a connected graph. Among all pairs at
    /// maximum distance the lexicographically smallest `(source, target)`
    /// wins, and the path itself is the lexicographically smallest one.
    pub fn diameter_path(&self) -> Result<Vec<Vertex>, GraphError> {
        if self.order() == 0 {
            return Err(GraphError::Empty);
        }
        let mut best: Option<(usize, Vertex, Vertex)> = None;
        for s in 0..self.order() {
            let dist = self.bfs(s);
            for (t, d) in dist.iter().enumerate() {
                let d = d.ok_or(GraphError::Disconnected)?;
                if best.is_none_or(|(bd, _, _)| d > bd) {
                    best = Some((d, s, t));
                }
            }
        }
        let (_, s, t) = best.unwrap();
        Ok(self.shortest_path(s, t).expect("connected"))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges).expect("induced edges are simple")
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| !self.has_edge(u, v)).collect();
        Graph::from_edges(n, edges).expect("complement edges are simple")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.order(), edges).expect("union edges are simple")
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut edges = self.disjoint_union(other).edges();
        edges.extend((0..shift).flat_map(|u| (0..other.order()).map(move |v| (u, v + shift))));
        Graph::from_edges(shift + other.order(), edges).expect("join edges are simple")
    }
}

/// Closed interval with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub start: BigRational,
    pub end: BigRational,
}

impl Interval {
    pub fn new(start: BigRational, end: BigRational) -> Self {
        Interval { start, end }
    }

    pub fn from_integers(start: i64, end: i64) -> Self {
        Interval::new(BigRational::from_integer(start.into()), BigRational::from_integer(end.into()))
    }

    /// Closed overlap: intervals sharing only an endpoint intersect.
    pub fn intersects(&self, other: &Interval) -> bool {
        self.start <= other.end && other.start <= self.end
    }
}

/// Intersection graph of closed intervals; vertex `i` is `intervals[i]`.
pub fn interval_graph(intervals: &[Interval]) -> Result<Graph, GraphError> {
    if let Some(i) = intervals.iter().position(|iv| iv.start >= iv.end) {
        return Err(GraphError::DegenerateInterval(i));
    }
    let mut order: Vec<usize> = (0..intervals.len()).collect();
    order.sort_by(|&a, &b| intervals[a].start.cmp(&intervals[b].start).then(a.cmp(&b)));
    let mut edges = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if intervals[j].start > intervals[i].end {
                break;
            }
            edges.push((i.min(j), i.max(j)));
        }
    }
    Graph::from_edges(intervals.len(), edges)
}

/// Permutation graph of `(1..=k, permutation)`: vertex `i - 1` stands for
/// element `i`, and `i < j` are adjacent when `j` precedes `i` in the permutation.
pub fn permutation_graph(permutation: &[usize]) -> Result<Graph, GraphError> {
    let k = permutation.len();
    let mut position = vec![usize::MAX; k];
    for (p, &e) in permutation.iter().enumerate() {
        if e == 0 || e > k || position[e - 1] != usize::MAX {
            return Err(GraphError::NotAPermutation(k));
        }
        position[e - 1] = p;
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if position[j] < position[i] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(k, edges)
}

/// Disk with a rational center and radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    pub x: BigRational,
    pub y: BigRational,
    pub radius: BigRational,
}

impl Disk {
    /// Closed intersection: tangent disks touch.
    pub fn intersects(&self, other: &Disk) -> bool {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        let s = &self.radius + &other.radius;
        &dx * &dx + &dy * &dy <= &s * &s
    }
}

/// Intersection graph of closed disks; vertex `i` is `disks[i]`.
///
/// A floating-point sweep discards far pairs and settles clear cases;
/// only pairs near tangency fall back to exact arithmetic.
pub fn disk_graph(disks: &[Disk]) -> Result<Graph, GraphError> {
    let zero = BigRational::from_integer(0.into());
    if let Some(i) = disks.iter().position(|d| d.radius <= zero) {
        return Err(GraphError::NonPositiveRadius(i));
    }
    let approx: Vec<[f64; 3]> = disks.iter().map(|d| [to_f64(&d.x), to_f64(&d.y), to_f64(&d.radius)]).collect();
    let mut order: Vec<usize> = (0..disks.len()).collect();
    order.sort_by(|&a, &b| (approx[a][0] - approx[a][2]).total_cmp(&(approx[b][0] - approx[b][2])));
    const REL: f64 = 1e-7;
    let mut edges = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let [xi, yi, ri] = approx[i];
        let reach = xi + ri;
        for &j in &order[pos + 1..] {
            let [xj, yj, rj] = approx[j];
            if xj - rj > reach + REL * (1.0 + reach.abs()) {
                break;
            }
            let d2 = (xi - xj).powi(2) + (yi - yj).powi(2);
            let s2 = (ri + rj).powi(2);
            let slack = REL * (1.0 + s2 + d2);
            let adjacent = if d2 > s2 + slack {
                false
            } else if d2 < s2 - slack {
                true
            } else {
                disks[i].intersects(&disks[j])
            };
            if adjacent {
                edges.push((i.min(j), i.max(j)));
            }
        }
    }
    Graph::from_edges(disks.len(), edges)
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
