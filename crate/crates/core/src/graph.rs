//! Labeled simple graphs on `0..n` with bitset adjacency, subgraph
//! extraction and 2-switch mechanics.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingParts(usize),
    #[error("invalid 2-switch {0}: {1}")]
    InvalidSwitch(TwoSwitch, &'static str),
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Row `v` of the adjacency matrix is stored as a little bitset of
/// `words` 64-bit words. Bits beyond `n` are always zero, so the derived
/// equality and ordering are equality and ordering of edge sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to a
    /// single edge; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    /// Adds every edge of `other`, which must have the same vertex count.
    pub(crate) fn absorb(&mut self, other: &Graph) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.adj.iter_mut().zip(&other.adj) {
            *a |= *b;
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted in descending order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn checked_vertices(g: &Graph, s: &[usize], seen: &mut [bool]) -> Result<(), GraphError> {
    for &v in s {
        if v >= g.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n });
        }
        if seen[v] {
            return Err(GraphError::DuplicateVertex(v));
        }
        seen[v] = true;
    }
    Ok(())
}

/// The subgraph induced by `s`. Vertices are relabeled in increasing
/// order of their original index; the returned map sends new labels to
/// old ones.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut seen = vec![false; g.n];
    checked_vertices(g, s, &mut seen)?;
    let map: Vec<usize> = (0..g.n).filter(|&v| seen[v]).collect();
    let mut h = Graph::empty(map.len());
    for (i, &u) in map.iter().enumerate() {
        for (j, &v) in map.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.insert_edge(i, j);
            }
        }
    }
    Ok((h, map))
}

/// The bipartite subgraph of crossing edges between the disjoint sets
/// `x` and `y`. In the result, vertex `i < x.len()` is `x[i]` and vertex
/// `x.len() + j` is `y[j]`; the returned map sends new labels to old ones.
pub fn bipartite_subgraph(
    g: &Graph,
    x: &[usize],
    y: &[usize],
) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut seen = vec![false; g.n];
    checked_vertices(g, x, &mut seen)?;
    for &v in y {
        if v < g.n && seen[v] {
            return Err(GraphError::OverlappingParts(v));
        }
    }
    checked_vertices(g, y, &mut seen)?;
    let p = x.len();
    let mut h = Graph::empty(p + y.len());
    for (i, &u) in x.iter().enumerate() {
        for (j, &v) in y.iter().enumerate() {
            if g.has_edge(u, v) {
                h.insert_edge(i, p + j);
            }
        }
    }
    Ok((h, x.iter().chain(y).copied().collect()))
}

/// The move `{ac, bd} ⇉ {ad, bc}` on an alternating 4-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoSwitch {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl TwoSwitch {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        TwoSwitch { a, b, c, d }
    }

    /// The move `{ad, bc} ⇉ {ac, bd}` that undoes this one.
    pub fn inverse(self) -> Self {
        TwoSwitch::new(self.a, self.b, self.d, self.c)
    }

    /// Rewrites vertex labels through `map` (new label to old label).
    pub fn relabel(self, map: &[usize]) -> Self {
        TwoSwitch::new(map[self.a], map[self.b], map[self.c], map[self.d])
    }

    /// The four labelings that delete and add the same edge pairs.
    fn orbit(self) -> [TwoSwitch; 4] {
        let TwoSwitch { a, b, c, d } = self;
        [
            TwoSwitch::new(a, b, c, d),
            TwoSwitch::new(b, a, d, c),
            TwoSwitch::new(c, d, a, b),
            TwoSwitch::new(d, c, b, a),
        ]
    }

    /// Lexicographically least labeling of the same move.
    pub fn canonical(self) -> Self {
        self.orbit().into_iter().min().unwrap()
    }

    /// Checks the move against `g`, naming the first violated condition.
    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        let TwoSwitch { a, b, c, d } = *self;
        let n = g.vertex_count();
        for v in [a, b, c, d] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        let vs = [a, b, c, d];
        for i in 0..4 {
            if vs[i + 1..].contains(&vs[i]) {
                return Err(GraphError::InvalidSwitch(*self, "repeated vertex"));
            }
        }
        if !g.has_edge(a, c) || !g.has_edge(b, d) {
            return Err(GraphError::InvalidSwitch(*self, "ac or bd is not an edge"));
        }
        if g.has_edge(a, d) || g.has_edge(b, c) {
            return Err(GraphError::InvalidSwitch(
                *self,
                "ad or bc is already an edge",
            ));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }

    pub(crate) fn apply_unchecked(&self, g: &mut Graph) {
        g.remove_edge(self.a, self.c);
        g.remove_edge(self.b, self.d);
        g.insert_edge(self.a, self.d);
        g.insert_edge(self.b, self.c);
    }
}

impl fmt::Display for TwoSwitch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let TwoSwitch { a, b, c, d } = *self;
        write!(f, "{{{a}{c},{b}{d}}}=>{{{a}{d},{b}{c}}}")
    }
}

pub fn apply_two_switch(g: &Graph, m: TwoSwitch) -> Result<Graph, GraphError> {
    m.check(g)?;
    let mut h = g.clone();
    m.apply_unchecked(&mut h);
    Ok(h)
}

/// Every valid 2-switch on `g`, one labeling per move (the canonical
/// one), in lexicographic order.
pub fn enumerate_two_switches(g: &Graph) -> Vec<TwoSwitch> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    // a is the smallest of the four vertices in the canonical labeling
    for a in 0..n {
        for c in g.neighbors(a).filter(|&c| c > a) {
            for b in a + 1..n {
                if b == c || g.has_edge(b, c) {
                    continue;
                }
                for d in g.neighbors(b).filter(|&d| d > a && d != c) {
                    if g.has_edge(a, d) {
                        continue;
                    }
                    let m = TwoSwitch::new(a, b, c, d);
                    if m.canonical() == m {
                        out.push(m);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}
