//! Degree-sequence and bipartite degree-sequence tests, partition
//! conjugation and the realizability test for tableaux.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tableau::{derive, BipartitionedList, DerivedLists, Tableau};

/// A list of nonnegative integers kept in descending order. Zeros are
/// allowed; [`Partition::trimmed`] drops them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn trimmed(&self) -> Partition {
        let end = self
            .parts
            .iter()
            .position(|&x| x == 0)
            .unwrap_or(self.parts.len());
        Partition {
            parts: self.parts[..end].to_vec(),
        }
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The transposed Young diagram: part `i` counts parts of `p` that are at
/// least `i`.
pub fn conjugate(p: &Partition) -> Partition {
    let max = p.parts.first().copied().unwrap_or(0);
    let parts = (1..=max)
        .map(|i| p.parts.iter().take_while(|&&x| x >= i).count())
        .collect();
    Partition { parts }
}

/// Row lengths of the part of the Young diagram on or right of the main
/// diagonal, and column lengths of the part strictly below it.
pub fn alpha_beta(p: &Partition) -> (Partition, Partition) {
    // rows and columns are 1-based as in the diagram
    let alpha: Vec<usize> = p
        .parts
        .iter()
        .enumerate()
        .map(|(r, &len)| (r + 1, len))
        .take_while(|&(row, len)| len >= row)
        .map(|(row, len)| len - row + 1)
        .collect();
    let max = p.parts.first().copied().unwrap_or(0);
    let beta: Vec<usize> = (1..=max)
        .map(|col| {
            p.parts
                .iter()
                .enumerate()
                .filter(|&(r, &len)| r + 1 > col && len >= col)
                .count()
        })
        .take_while(|&c| c > 0)
        .collect();
    (Partition { parts: alpha }, Partition { parts: beta })
}

/// `max { i : d_i >= i - 1 }` with 1-based indices, or 0 for an empty
/// list.
fn eg_range(d: &[usize]) -> usize {
    d.iter()
        .enumerate()
        .filter(|&(i, &x)| x >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// Left and right sides of the `k`-th Erdős–Gallai inequality.
fn eg_sides(d: &[usize], k: usize) -> (usize, usize) {
    let lhs: usize = d[..k].iter().sum();
    let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
    (lhs, rhs)
}

fn eg_admissible(d: &Partition) -> bool {
    let n = d.len();
    d.sum().is_multiple_of(2) && d.parts.first().is_none_or(|&max| max < n)
}

pub fn erdos_gallai(d: &Partition) -> bool {
    if !eg_admissible(d) {
        return false;
    }
    let d = d.parts();
    (1..=eg_range(d)).all(|k| {
        let (lhs, rhs) = eg_sides(d, k);
        lhs <= rhs
    })
}

pub fn merris_graphic(d: &Partition) -> bool {
    if d.sum() % 2 == 1 {
        return false;
    }
    // beta runs out before alpha only when it has hit zero
    let (alpha, beta) = alpha_beta(d);
    let mut sa = 0;
    let mut sb = 0;
    alpha.parts.iter().enumerate().all(|(i, &a)| {
        sa += a;
        sb += beta.parts.get(i).copied().unwrap_or(0);
        sb >= sa
    })
}

/// Whether some bipartite graph has degrees `x` on one side and `y` on the
/// other. Neither list needs to be sorted.
pub fn gale_ryser(x: &Partition, y: &[usize]) -> bool {
    if x.sum() != y.iter().sum::<usize>() {
        return false;
    }
    let mut prefix = 0;
    x.parts.iter().enumerate().all(|(i, &xi)| {
        let k = i + 1;
        prefix += xi;
        prefix <= y.iter().map(|&yj| yj.min(k)).sum::<usize>()
    })
}

/// A graphic sequence with exactly one labeled realization.
pub fn is_threshold_sequence(d: &Partition) -> bool {
    if !erdos_gallai(d) {
        return false;
    }
    let (alpha, beta) = alpha_beta(d);
    alpha == beta
}

/// Threshold test through the Erdős–Gallai inequalities: graphic, with
/// the first `m(d)` inequalities all tight.
pub fn is_threshold_sequence_eg(d: &Partition) -> bool {
    if !erdos_gallai(d) {
        return false;
    }
    let d = d.parts();
    (1..=eg_range(d)).all(|k| {
        let (lhs, rhs) = eg_sides(d, k);
        lhs == rhs
    })
}

/// A bigraphic pair with exactly one realization on its fixed parts:
/// the conjugate of `x` is `y`, ignoring zeros.
pub fn is_difference_pair(x: &Partition, y: &Partition) -> bool {
    gale_ryser(x, y.parts()) && conjugate(x) == y.trimmed()
}

/// Which part of a tableau's realizability test failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphicalityFailure {
    /// Some entry is not a row length.
    Infeasible { row: usize, entry: usize },
    /// The within-class list of degree `k` has no realization.
    SameDegree { k: usize, list: Vec<usize> },
    /// The crossing list between classes `k > l` has no bipartite
    /// realization.
    CrossDegree {
        k: usize,
        l: usize,
        list: BipartitionedList,
    },
}

impl fmt::Display for GraphicalityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphicalityFailure::Infeasible { row, entry } => {
                write!(
                    f,
                    "infeasible: entry {entry} in row {row} is not a row length"
                )
            }
            GraphicalityFailure::SameDegree { k, list } => {
                write!(
                    f,
                    "D^{k} = {} is not graphic",
                    Partition {
                        parts: list.clone()
                    }
                )
            }
            GraphicalityFailure::CrossDegree { k, l, list } => {
                write!(f, "D^{{{k},{l}}} = {list} is not bigraphic")
            }
        }
    }
}

pub(crate) fn derived_failures(dl: &DerivedLists) -> Vec<GraphicalityFailure> {
    let mut failures = Vec::new();
    for (&k, list) in &dl.same_deg {
        if !erdos_gallai(&Partition::from(list.as_slice())) {
            failures.push(GraphicalityFailure::SameDegree {
                k,
                list: list.clone(),
            });
        }
    }
    for (&(k, l), list) in &dl.cross_deg {
        if !gale_ryser(&Partition::from(list.part_x.as_slice()), &list.part_y) {
            failures.push(GraphicalityFailure::CrossDegree {
                k,
                l,
                list: list.clone(),
            });
        }
    }
    failures
}

/// Every reason `t` fails to be the NDL of a simple graph; empty when it
/// is one.
pub fn graphicality_failures(t: &Tableau) -> Vec<GraphicalityFailure> {
    match derive(t) {
        Err(crate::tableau::TableauError::Infeasible { row, entry }) => {
            vec![GraphicalityFailure::Infeasible { row, entry }]
        }
        Ok(dl) => derived_failures(&dl),
    }
}

/// `t` is the NDL of a simple graph: it is feasible, every within-class
/// list is graphic and every crossing list is bigraphic.
pub fn is_graphic_ndl(t: &Tableau) -> bool {
    graphicality_failures(t).is_empty()
}
