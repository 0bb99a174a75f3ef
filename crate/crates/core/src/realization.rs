//! Constructing realizations of degree sequences and tableaux, and
//! moving between realizations of the same NDL with N-switches.
//!
//! Both canonical realizations are built greedily. Vertices are handled
//! in index order, and each one is joined to the not-yet-handled vertices
//! of largest residual degree, with ties going to the smaller index. Any
//! realization can be pushed onto the canonical one by 2-switches (see
//! [`steer_neighborhood`]). Doing that separately inside every degree
//! class and between every pair of classes gives an N-switch path
//! between any two realizations of one NDL.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    bipartite_subgraph, enumerate_two_switches, induced_subgraph, Graph, GraphError, TwoSwitch,
};
use crate::graphicality::{
    derived_failures, erdos_gallai, gale_ryser, GraphicalityFailure, Partition,
};
use crate::tableau::{derive, ndl_of, Tableau, TableauError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizationError {
    #[error("{0:?} is not a graphic sequence")]
    NotGraphic(Vec<usize>),
    #[error("({x:?}; {y:?}) is not a bigraphic pair")]
    NotBigraphic { x: Vec<usize>, y: Vec<usize> },
    #[error("tableau has no realization: {}", display_failures(.0))]
    NotGraphicNdl(Vec<GraphicalityFailure>),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is a 2-switch but not an N-switch: deg(a) != deg(b) or deg(c) != deg(d)")]
    NotNSwitch(TwoSwitch),
    #[error("steering precondition failed: {0}")]
    Steering(&'static str),
    #[error("graphs have different vertex counts ({0} and {1})")]
    VertexCountMismatch(usize, usize),
    #[error("graphs have different NDLs: first difference at vertex {0}")]
    NdlMismatch(usize),
}

fn display_failures(failures: &[GraphicalityFailure]) -> String {
    failures
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// `order` sorted by degree descending, then index ascending.
fn principal_order(order: &mut [usize], degree: impl Fn(usize) -> usize) {
    order.sort_by(|&u, &v| degree(v).cmp(&degree(u)).then(u.cmp(&v)));
}

/// The canonical realization of the degree list `p`, where `p[i]` is the
/// degree of vertex `i`. Each vertex in turn takes its principal
/// neighborhood among the vertices after it.
pub fn canonical_realization(p: &[usize]) -> Result<Graph, RealizationError> {
    if !erdos_gallai(&Partition::from(p)) {
        return Err(RealizationError::NotGraphic(p.to_vec()));
    }
    let n = p.len();
    let mut residual = p.to_vec();
    let mut g = Graph::empty(n);
    for i in 0..n {
        let mut rest: Vec<usize> = (i + 1..n).collect();
        principal_order(&mut rest, |v| residual[v]);
        let take = residual[i];
        if take > rest.len() || rest[..take].iter().any(|&v| residual[v] == 0) {
            return Err(RealizationError::NotGraphic(p.to_vec()));
        }
        for &v in &rest[..take] {
            g.insert_edge(i, v);
            residual[v] -= 1;
        }
        residual[i] = 0;
    }
    Ok(g)
}

/// The canonical bipartite realization with degrees `x` on one side and
/// `y` on the other. Vertex `i` of the result is `x_i` and vertex
/// `x.len() + j` is `y_j`.
pub fn canonical_bipartite_realization(
    x: &[usize],
    y: &[usize],
) -> Result<Graph, RealizationError> {
    let not_bigraphic = || RealizationError::NotBigraphic {
        x: x.to_vec(),
        y: y.to_vec(),
    };
    if !gale_ryser(&Partition::from(x), y) {
        return Err(not_bigraphic());
    }
    let p = x.len();
    let mut residual = y.to_vec();
    let mut g = Graph::empty(p + y.len());
    for (i, &take) in x.iter().enumerate() {
        let mut order: Vec<usize> = (0..y.len()).collect();
        principal_order(&mut order, |j| residual[j]);
        if take > order.len() || order[..take].iter().any(|&j| residual[j] == 0) {
            return Err(not_bigraphic());
        }
        for &j in &order[..take] {
            g.insert_edge(i, p + j);
            residual[j] -= 1;
        }
    }
    Ok(g)
}

/// Repeatedly applies the 2-switch `{ux, wv} ⇉ {uv, wx}` until the
/// neighbors of `v` inside `t` are exactly `s`. Only vertices marked in
/// `active` take part; degrees are those of the active subgraph.
fn steer_within(
    g: &mut Graph,
    active: &[bool],
    v: usize,
    t: &[usize],
    in_s: &[bool],
    moves: &mut Vec<TwoSwitch>,
) {
    while let Some(u) = t.iter().copied().find(|&u| in_s[u] && !g.has_edge(v, u)) {
        // |N(v) ∩ t| = |s|, so v has a neighbor in t - s
        let w = t
            .iter()
            .copied()
            .find(|&w| !in_s[w] && g.has_edge(v, w))
            .expect("v has a neighbor outside s");
        // deg(u) >= deg(w) and v ∈ N(w) - N(u)
        let x = g
            .neighbors(u)
            .find(|&x| active[x] && x != w && !g.has_edge(w, x))
            .expect("u has a neighbor that w lacks");
        let m = TwoSwitch::new(u, w, x, v);
        m.apply_unchecked(g);
        moves.push(m);
    }
}

/// Rewires `g` by 2-switches so that the neighbors of `v` inside `t` are
/// exactly `s`, leaving the neighbors of `v` outside `t` alone.
///
/// `s` must have as many vertices as `v` has neighbors in `t`, and no
/// vertex of `t - s` may have larger degree than a vertex of `s`.
/// Returns the rewired graph and the moves, in application order.
pub fn steer_neighborhood(
    g: &Graph,
    v: usize,
    t: &[usize],
    s: &[usize],
) -> Result<(Graph, Vec<TwoSwitch>), RealizationError> {
    let n = g.vertex_count();
    let check = |ok: bool, msg| {
        if ok {
            Ok(())
        } else {
            Err(RealizationError::Steering(msg))
        }
    };
    check(v < n, "v out of range")?;
    let mut in_t = vec![false; n];
    for &u in t {
        check(u < n, "vertex of t out of range")?;
        check(u != v, "t contains v")?;
        check(!in_t[u], "t repeats a vertex")?;
        in_t[u] = true;
    }
    let mut in_s = vec![false; n];
    for &u in s {
        check(u < n && in_t[u], "s is not a subset of t")?;
        check(!in_s[u], "s repeats a vertex")?;
        in_s[u] = true;
    }
    let inside = t.iter().filter(|&&u| g.has_edge(v, u)).count();
    check(
        inside == s.len(),
        "|s| differs from the number of neighbors of v in t",
    )?;
    let min_s = s.iter().map(|&u| g.degree(u)).min();
    let max_rest = t.iter().filter(|&&u| !in_s[u]).map(|&u| g.degree(u)).max();
    if let (Some(lo), Some(hi)) = (min_s, max_rest) {
        check(
            lo >= hi,
            "s does not consist of maximum-degree vertices of t",
        )?;
    }

    let mut h = g.clone();
    let mut moves = Vec::new();
    steer_within(&mut h, &vec![true; n], v, t, &in_s, &mut moves);
    Ok((h, moves))
}

fn active_degree(g: &Graph, active: &[bool], v: usize) -> usize {
    g.neighbors(v).filter(|&u| active[u]).count()
}

/// Rewires `g` by 2-switches into the canonical realization of its own
/// degree list, returning the moves.
pub fn steer_to_canonical(g: &Graph) -> (Graph, Vec<TwoSwitch>) {
    let n = g.vertex_count();
    let mut h = g.clone();
    let mut moves = Vec::new();
    let mut active = vec![true; n];
    let mut in_s = vec![false; n];
    for v in 0..n {
        // degrees in h - {0..v-1}
        let mut rest: Vec<usize> = (v + 1..n).collect();
        let deg: Vec<usize> = (0..n).map(|u| active_degree(&h, &active, u)).collect();
        principal_order(&mut rest, |u| deg[u]);
        let want = deg[v];
        for &u in &rest[..want] {
            in_s[u] = true;
        }
        steer_within(&mut h, &active, v, &rest, &in_s, &mut moves);
        for &u in &rest[..want] {
            in_s[u] = false;
        }
        active[v] = false;
    }
    (h, moves)
}

/// Bipartite counterpart of [`steer_to_canonical`] for a graph whose
/// first `p` vertices form one side. Every move keeps both sides
/// independent.
pub fn steer_bipartite_to_canonical(g: &Graph, p: usize) -> (Graph, Vec<TwoSwitch>) {
    let n = g.vertex_count();
    let mut h = g.clone();
    let mut moves = Vec::new();
    let mut active = vec![true; n];
    let mut in_s = vec![false; n];
    for v in 0..p {
        let mut ys: Vec<usize> = (p..n).collect();
        let deg: Vec<usize> = (0..n).map(|u| active_degree(&h, &active, u)).collect();
        principal_order(&mut ys, |u| deg[u]);
        let want = deg[v];
        for &u in &ys[..want] {
            in_s[u] = true;
        }
        steer_within(&mut h, &active, v, &ys, &in_s, &mut moves);
        for &u in &ys[..want] {
            in_s[u] = false;
        }
        active[v] = false;
    }
    (h, moves)
}

/// A realization of `t` with row `i` as vertex `i`: the canonical
/// realization of each within-class list placed on its class, plus the
/// canonical bipartite realization of each crossing list.
pub fn realize_ndl(t: &Tableau) -> Result<Graph, RealizationError> {
    let dl = derive(t)?;
    let failures = derived_failures(&dl);
    if !failures.is_empty() {
        return Err(RealizationError::NotGraphicNdl(failures));
    }
    let mut g = Graph::empty(t.len());
    let mut place = |part: &Graph, map: &[usize]| {
        let mut mapped = Graph::empty(t.len());
        for (u, v) in part.edges() {
            mapped.insert_edge(map[u], map[v]);
        }
        g.absorb(&mapped);
    };
    for (k, class) in &dl.classes {
        place(&canonical_realization(&dl.same_deg[k])?, class);
    }
    for (&(k, l), list) in &dl.cross_deg {
        let map: Vec<usize> = dl.classes[&k]
            .iter()
            .chain(&dl.classes[&l])
            .copied()
            .collect();
        place(
            &canonical_bipartite_realization(&list.part_x, &list.part_y)?,
            &map,
        );
    }
    Ok(g)
}

/// A 2-switch `{ac, bd} ⇉ {ad, bc}` with `deg(a) = deg(b)` and
/// `deg(c) = deg(d)`. It leaves every vertex's neighbor-degree list
/// unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NSwitch(pub TwoSwitch);

impl NSwitch {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        NSwitch(TwoSwitch::new(a, b, c, d))
    }

    pub fn inverse(self) -> Self {
        NSwitch(self.0.inverse())
    }

    /// Edge pattern problems surface as [`RealizationError::Graph`],
    /// degree mismatches as [`RealizationError::NotNSwitch`].
    pub fn check(&self, g: &Graph) -> Result<(), RealizationError> {
        self.0.check(g)?;
        let TwoSwitch { a, b, c, d } = self.0;
        if g.degree(a) != g.degree(b) || g.degree(c) != g.degree(d) {
            return Err(RealizationError::NotNSwitch(self.0));
        }
        Ok(())
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

impl fmt::Display for NSwitch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn enumerate_n_switches(g: &Graph) -> Vec<NSwitch> {
    let deg = g.degrees();
    enumerate_two_switches(g)
        .into_iter()
        .filter(|m| deg[m.a] == deg[m.b] && deg[m.c] == deg[m.d])
        .map(NSwitch)
        .collect()
}

pub fn apply_n_switch(g: &Graph, m: NSwitch) -> Result<Graph, RealizationError> {
    m.check(g)?;
    let mut h = g.clone();
    m.0.apply_unchecked(&mut h);
    Ok(h)
}

/// N-switches in application order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SwitchPath {
    pub moves: Vec<NSwitch>,
}

impl SwitchPath {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Applies the moves to `g` in order, checking each against the graph
    /// it is applied to.
    pub fn apply(&self, g: &Graph) -> Result<Graph, RealizationError> {
        let mut h = g.clone();
        for m in &self.moves {
            m.check(&h)?;
            m.0.apply_unchecked(&mut h);
        }
        Ok(h)
    }
}

/// The canonicalizing moves of `g`, followed by the canonicalizing moves
/// of `h` undone in reverse order.
fn meet_at_canonical(
    g_moves: Vec<TwoSwitch>,
    h_moves: Vec<TwoSwitch>,
    map: &[usize],
    out: &mut Vec<NSwitch>,
) {
    out.extend(g_moves.into_iter().map(|m| NSwitch(m.relabel(map))));
    out.extend(
        h_moves
            .into_iter()
            .rev()
            .map(|m| NSwitch(m.inverse().relabel(map))),
    );
}

/// N-switches turning `g` into `h`. Both graphs must have the same
/// labeled NDL.
pub fn switch_sequence(g: &Graph, h: &Graph) -> Result<SwitchPath, RealizationError> {
    let (n, n2) = (g.vertex_count(), h.vertex_count());
    if n != n2 {
        return Err(RealizationError::VertexCountMismatch(n, n2));
    }
    let (tg, th) = (ndl_of(g), ndl_of(h));
    if let Some(v) = (0..n).find(|&v| tg.row(v) != th.row(v)) {
        return Err(RealizationError::NdlMismatch(v));
    }
    let dl = derive(&tg)?;
    let mut moves = Vec::new();
    for class in dl.classes.values() {
        let (gk, map) = induced_subgraph(g, class)?;
        let (hk, _) = induced_subgraph(h, class)?;
        if gk != hk {
            let (_, gm) = steer_to_canonical(&gk);
            let (_, hm) = steer_to_canonical(&hk);
            meet_at_canonical(gm, hm, &map, &mut moves);
        }
    }
    for &(k, l) in dl.cross_deg.keys() {
        let (x, y) = (&dl.classes[&k], &dl.classes[&l]);
        let (gkl, map) = bipartite_subgraph(g, x, y)?;
        let (hkl, _) = bipartite_subgraph(h, x, y)?;
        if gkl != hkl {
            let (_, gm) = steer_bipartite_to_canonical(&gkl, x.len());
            let (_, hm) = steer_bipartite_to_canonical(&hkl, x.len());
            meet_at_canonical(gm, hm, &map, &mut moves);
        }
    }
    Ok(SwitchPath { moves })
}
