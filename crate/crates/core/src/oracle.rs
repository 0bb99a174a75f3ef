//! Brute-force ground truth at small sizes.
//!
//! Everything here works by exhaustive enumeration and shares nothing
//! with the criteria it is used to check: realizations are found by
//! backtracking over vertex neighborhoods, and neighbor degrees are
//! recomputed from scratch. Size caps turn into [`OracleError`] rather
//! than long runs.

use std::collections::HashMap;
use std::ops::Range;

use thiserror::Error;

use crate::graph::{Graph, TwoSwitch};
use crate::tableau::Tableau;

/// Largest vertex count [`enumerate_graphs`] accepts.
pub const MAX_GRAPH_N: usize = 7;
/// Largest vertex count for realization searches.
pub const MAX_REALIZATION_N: usize = 7;
/// Largest `|X| * |Y|` for bipartite realization searches.
pub const MAX_BIPARTITE_CELLS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("size {size} exceeds the oracle cap of {cap}")]
    SizeCap { size: usize, cap: usize },
}

fn capped(size: usize, cap: usize) -> Result<(), OracleError> {
    if size > cap {
        Err(OracleError::SizeCap { size, cap })
    } else {
        Ok(())
    }
}

/// Vertex pairs `(u, v)`, `u < v`, in the order that assigns them bits of
/// an edge mask.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Number of labeled graphs on `n` vertices.
pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The graph whose edges are the set bits of `mask` under [`pair_order`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut bits = mask;
    while bits != 0 {
        let (u, v) = pairs[bits.trailing_zeros() as usize];
        g.insert_edge(u, v);
        bits &= bits - 1;
    }
    g
}

/// Lazily yields the labeled graphs with edge masks in a range.
pub struct GraphStream {
    n: usize,
    pairs: Vec<(usize, usize)>,
    masks: Range<u64>,
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mask = self.masks.next()?;
        Some(graph_from_mask(self.n, &self.pairs, mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}

/// Every labeled graph on `n` vertices, once each, in edge-mask order.
pub fn enumerate_graphs(n: usize) -> Result<GraphStream, OracleError> {
    capped(n, MAX_GRAPH_N)?;
    enumerate_graph_range(n, 0..mask_count(n))
}

/// The graphs with edge masks in `masks`; disjoint ranges split the
/// enumeration between workers.
pub fn enumerate_graph_range(n: usize, masks: Range<u64>) -> Result<GraphStream, OracleError> {
    capped(n, MAX_GRAPH_N)?;
    let end = masks.end.min(mask_count(n));
    Ok(GraphStream {
        n,
        pairs: pair_order(n),
        masks: masks.start.min(end)..end,
    })
}

/// All `k`-subsets of `pool`, in lexicographic order of positions.
fn for_each_subset(pool: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(
        pool: &[usize],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        let need = k - chosen.len();
        for i in start..=pool.len() - need {
            chosen.push(pool[i]);
            go(pool, k, i + 1, chosen, f);
            chosen.pop();
        }
    }
    if k <= pool.len() {
        go(pool, k, 0, &mut Vec::with_capacity(k), f);
    }
}

/// Every labeled graph in which vertex `i` has degree `degrees[i]`.
pub fn enumerate_degree_realizations(degrees: &[usize]) -> Result<Vec<Graph>, OracleError> {
    let n = degrees.len();
    capped(n, MAX_REALIZATION_N)?;
    let mut out = Vec::new();
    if degrees.iter().any(|&d| d >= n.max(1)) && n > 0 {
        return Ok(out);
    }

    fn go(u: usize, residual: &mut Vec<usize>, g: &mut Graph, out: &mut Vec<Graph>) {
        let n = residual.len();
        if u == n {
            out.push(g.clone());
            return;
        }
        let pool: Vec<usize> = (u + 1..n).filter(|&v| residual[v] > 0).collect();
        let need = residual[u];
        for_each_subset(&pool, need, &mut |chosen| {
            for &v in chosen {
                g.insert_edge(u, v);
                residual[v] -= 1;
            }
            let saved = residual[u];
            residual[u] = 0;
            go(u + 1, residual, g, out);
            residual[u] = saved;
            for &v in chosen {
                g.remove_edge(u, v);
                residual[v] += 1;
            }
        });
    }

    let mut residual = degrees.to_vec();
    go(0, &mut residual, &mut Graph::empty(n), &mut out);
    Ok(out)
}

/// Every labeled graph whose NDL, row for row, is `t`.
pub fn enumerate_labeled_realizations(t: &Tableau) -> Result<Vec<Graph>, OracleError> {
    let degrees = t.lengths();
    let candidates = enumerate_degree_realizations(&degrees)?;
    Ok(candidates
        .into_iter()
        .filter(|g| {
            (0..g.vertex_count()).all(|v| {
                let mut seen: Vec<usize> = g.neighbors(v).map(|u| degrees[u]).collect();
                seen.sort_unstable_by(|a, b| b.cmp(a));
                seen == t.row(v)
            })
        })
        .collect())
}

/// Every bipartite graph with `x_i` at vertex `i` and `y_j` at vertex
/// `x.len() + j`.
pub fn enumerate_bipartite_realizations(
    x: &[usize],
    y: &[usize],
) -> Result<Vec<Graph>, OracleError> {
    capped(x.len() * y.len(), MAX_BIPARTITE_CELLS)?;
    let p = x.len();
    let mut out = Vec::new();

    fn go(i: usize, x: &[usize], residual: &mut Vec<usize>, g: &mut Graph, out: &mut Vec<Graph>) {
        let p = x.len();
        if i == p {
            if residual.iter().all(|&r| r == 0) {
                out.push(g.clone());
            }
            return;
        }
        let pool: Vec<usize> = (0..residual.len()).filter(|&j| residual[j] > 0).collect();
        for_each_subset(&pool, x[i], &mut |chosen| {
            for &j in chosen {
                g.insert_edge(i, p + j);
                residual[j] -= 1;
            }
            go(i + 1, x, residual, g, out);
            for &j in chosen {
                g.remove_edge(i, p + j);
                residual[j] += 1;
            }
        });
    }

    let mut residual = y.to_vec();
    go(
        0,
        x,
        &mut residual,
        &mut Graph::empty(p + y.len()),
        &mut out,
    );
    Ok(out)
}

/// Number of labeled graphs on `n` vertices for each degree vector
/// (indexed by vertex).
pub fn degree_census(n: usize) -> Result<HashMap<Vec<usize>, usize>, OracleError> {
    let mut census = HashMap::new();
    for g in enumerate_graphs(n)? {
        *census.entry(g.degrees()).or_insert(0) += 1;
    }
    Ok(census)
}

/// Counts keyed by the degree vectors of the two parts.
pub type BipartiteCensus = HashMap<(Vec<usize>, Vec<usize>), usize>;

/// Number of bipartite graphs on parts of sizes `p` and `q` for each pair
/// of degree vectors.
pub fn bipartite_census(p: usize, q: usize) -> Result<BipartiteCensus, OracleError> {
    let cells = p * q;
    capped(cells, MAX_BIPARTITE_CELLS)?;
    let mut census = HashMap::new();
    for mask in 0u64..1 << cells {
        let mut x = vec![0; p];
        let mut y = vec![0; q];
        for cell in 0..cells {
            if mask >> cell & 1 == 1 {
                x[cell / q] += 1;
                y[cell % q] += 1;
            }
        }
        *census.entry((x, y)).or_insert(0) += 1;
    }
    Ok(census)
}

/// Realizations joined by single moves.
#[derive(Debug, Clone)]
pub struct RealizationSpace {
    pub nodes: Vec<Graph>,
    /// Pairs of node indices `(i, j)`, `i < j`, one move apart.
    pub edges: Vec<(usize, usize)>,
    pub components: usize,
}

impl RealizationSpace {
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    fn build(nodes: Vec<Graph>, moves: impl Fn(&Graph) -> Vec<TwoSwitch>) -> Self {
        let index: HashMap<&Graph, usize> = nodes.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut edges = Vec::new();
        for (i, g) in nodes.iter().enumerate() {
            for m in moves(g) {
                let mut h = g.clone();
                m.apply_unchecked(&mut h);
                let j = *index
                    .get(&h)
                    .expect("a move stays inside the realization set");
                if i < j {
                    edges.push((i, j));
                }
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a] = b;
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let components = (0..nodes.len())
            .filter(|&i| root(&mut parent, i) == i)
            .count();
        RealizationSpace {
            nodes,
            edges,
            components,
        }
    }
}

fn naive_moves(g: &Graph, same_degrees: bool) -> Vec<TwoSwitch> {
    let n = g.vertex_count();
    let deg = g.degrees();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct
                        && g.has_edge(a, c)
                        && g.has_edge(b, d)
                        && !g.has_edge(a, d)
                        && !g.has_edge(b, c)
                        && (!same_degrees || (deg[a] == deg[b] && deg[c] == deg[d]))
                    {
                        out.push(TwoSwitch::new(a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

/// Every 2-switch on `g` as an ordered quadruple, by a plain scan over
/// all 4-tuples. Each move shows up once per labeling.
pub fn naive_two_switches(g: &Graph) -> Vec<TwoSwitch> {
    naive_moves(g, false)
}

/// The realizations of `t` joined by N-switches.
pub fn realization_space(t: &Tableau) -> Result<RealizationSpace, OracleError> {
    let nodes = enumerate_labeled_realizations(t)?;
    Ok(RealizationSpace::build(nodes, |g| naive_moves(g, true)))
}

/// The realizations of a degree vector joined by 2-switches.
pub fn two_switch_space(degrees: &[usize]) -> Result<RealizationSpace, OracleError> {
    let nodes = enumerate_degree_realizations(degrees)?;
    Ok(RealizationSpace::build(nodes, naive_two_switches))
}

/// Degrees inside the subgraph induced by `q`, sorted.
fn induced_degrees(g: &Graph, q: [usize; 4]) -> [usize; 4] {
    let mut d = q.map(|u| q.iter().filter(|&&v| g.has_edge(u, v)).count());
    d.sort_unstable();
    d
}

/// Some four vertices of `vs` induce 2K2, C4 or P4.
pub fn has_induced_2k2_c4_p4(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for m in l + 1..k {
                    // on four vertices these degree multisets determine the graph
                    let d = induced_degrees(g, [vs[i], vs[j], vs[l], vs[m]]);
                    if matches!(d, [1, 1, 1, 1] | [2, 2, 2, 2] | [1, 1, 2, 2]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Some `a, b` in `xs` and `c, d` in `ys` have `ac`, `bd` as edges and
/// `ad`, `bc` as non-edges.
pub fn has_crossing_2k2(g: &Graph, xs: &[usize], ys: &[usize]) -> bool {
    for (i, &a) in xs.iter().enumerate() {
        for &b in &xs[i + 1..] {
            for &c in ys {
                for &d in ys {
                    if c != d
                        && g.has_edge(a, c)
                        && g.has_edge(b, d)
                        && !g.has_edge(a, d)
                        && !g.has_edge(b, c)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// No degree class of `g` induces 2K2, C4 or P4, and no two classes
/// carry an induced 2K2 made of crossing edges.
pub fn free_of_positional_obstructions(g: &Graph) -> bool {
    let deg = g.degrees();
    let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
    for (v, &k) in deg.iter().enumerate() {
        classes.entry(k).or_default().push(v);
    }
    let classes: Vec<&Vec<usize>> = classes.values().collect();
    if classes.iter().any(|c| has_induced_2k2_c4_p4(g, c)) {
        return false;
    }
    for (i, x) in classes.iter().enumerate() {
        for y in &classes[i + 1..] {
            if has_crossing_2k2(g, x, y) {
                return false;
            }
        }
    }
    true
}
