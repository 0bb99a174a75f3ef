//! Neighborhood degree lists.
//!
//! A [`Tableau`] is a list of rows of nonnegative integers. The
//! neighborhood degree list of a graph has one row per vertex holding the
//! degrees of that vertex's neighbors, so row lengths are the vertex
//! degrees. Row order carries the vertex labeling; entries within a row
//! are always kept in descending order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("tableau is not feasible: entry {entry} in row {row} is not a row length")]
    Infeasible { row: usize, entry: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau, sorting each row into descending order. Row order
    /// is kept as given.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let mut rows = rows;
        for row in &mut rows {
            row.sort_unstable_by(|a, b| b.cmp(a));
        }
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row lengths, indexed by row.
    pub fn lengths(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }
}

impl From<Vec<Vec<usize>>> for Tableau {
    fn from(rows: Vec<Vec<usize>>) -> Self {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "(")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ")")
    }
}

/// The labeled NDL of `g`: row `i` lists the degrees of the neighbors of
/// vertex `i`.
pub fn ndl_of(g: &Graph) -> Tableau {
    let deg = g.degrees();
    let rows = (0..g.vertex_count())
        .map(|v| g.neighbors(v).map(|u| deg[u]).collect())
        .collect();
    Tableau::new(rows)
}

/// Longer rows first; rows of equal length in descending lexicographic
/// order.
fn canonical_order(x: &[usize], y: &[usize]) -> Ordering {
    y.len().cmp(&x.len()).then_with(|| y.cmp(x))
}

pub fn canonicalize(t: &Tableau) -> Tableau {
    let mut rows = t.rows.clone();
    rows.sort_by(|x, y| canonical_order(x, y));
    Tableau { rows }
}

/// Same number of rows, and row `i` of both agree for every `i`.
pub fn ndl_equal_labeled(t1: &Tableau, t2: &Tableau) -> bool {
    t1 == t2
}

/// Equal up to a permutation of the rows.
pub fn ndl_equal_unlabeled(t1: &Tableau, t2: &Tableau) -> bool {
    canonicalize(t1) == canonicalize(t2)
}

fn first_infeasible(t: &Tableau) -> Option<(usize, usize)> {
    let lengths = t.lengths();
    let max = lengths.iter().copied().max().unwrap_or(0);
    let mut present = vec![false; max + 1];
    for &l in &lengths {
        present[l] = true;
    }
    t.rows.iter().enumerate().find_map(|(i, row)| {
        row.iter()
            .find(|&&x| x > max || !present[x])
            .map(|&x| (i, x))
    })
}

/// Every entry equals the length of some row.
pub fn is_feasible(t: &Tableau) -> bool {
    first_infeasible(t).is_none()
}

pub fn ndl_entry_sum(t: &Tableau) -> usize {
    t.rows.iter().flatten().sum()
}

/// A list of integers split into two parts, written `(x; y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BipartitionedList {
    pub part_x: Vec<usize>,
    pub part_y: Vec<usize>,
}

impl BipartitionedList {
    pub fn new(part_x: Vec<usize>, part_y: Vec<usize>) -> Self {
        BipartitionedList { part_x, part_y }
    }
}

impl fmt::Display for BipartitionedList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({};{})", join(&self.part_x), join(&self.part_y))
    }
}

/// Lists derived from a feasible tableau.
///
/// For each row length `k`, `classes[k]` holds the rows of length `k`
/// (the class `V_k`) in increasing order. `mu(i, l)` counts occurrences
/// of `l` in row `i`. `same_deg[k]` lists `mu(i, k)` over `i` in `V_k`,
/// the degrees a realization must have inside `V_k`. For `k > l`,
/// `cross_deg[(k, l)]` lists `mu(i, l)` over `V_k` and then `mu(j, k)`
/// over `V_l`, the degrees of the bipartite graph of edges between the
/// two classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedLists {
    pub d: Vec<usize>,
    pub classes: BTreeMap<usize, Vec<usize>>,
    mu: Vec<BTreeMap<usize, usize>>,
    pub same_deg: BTreeMap<usize, Vec<usize>>,
    pub cross_deg: BTreeMap<(usize, usize), BipartitionedList>,
    /// Classes `k` whose `same_deg` list has an odd sum.
    pub parity_violations: Vec<usize>,
    /// Pairs `(k, l)` whose two parts have different sums.
    pub double_count_violations: Vec<(usize, usize)>,
}

impl DerivedLists {
    /// Occurrences of `value` in row `row`; zero when absent.
    pub fn mu(&self, row: usize, value: usize) -> usize {
        self.mu[row].get(&value).copied().unwrap_or(0)
    }

    /// The distinct row lengths in increasing order.
    pub fn distinct_degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.keys().copied()
    }

    pub fn is_consistent(&self) -> bool {
        self.parity_violations.is_empty() && self.double_count_violations.is_empty()
    }
}

pub fn derive(t: &Tableau) -> Result<DerivedLists, TableauError> {
    if let Some((row, entry)) = first_infeasible(t) {
        return Err(TableauError::Infeasible { row, entry });
    }
    let d = t.lengths();
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &k) in d.iter().enumerate() {
        classes.entry(k).or_default().push(i);
    }
    let mu: Vec<BTreeMap<usize, usize>> = t
        .rows
        .iter()
        .map(|row| {
            let mut m = BTreeMap::new();
            for &x in row {
                *m.entry(x).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let count = |i: usize, l: usize| mu[i].get(&l).copied().unwrap_or(0);

    let same_deg: BTreeMap<usize, Vec<usize>> = classes
        .iter()
        .map(|(&k, rows)| (k, rows.iter().map(|&i| count(i, k)).collect()))
        .collect();
    let mut cross_deg = BTreeMap::new();
    for (&l, low) in &classes {
        for (&k, high) in classes.range(l + 1..) {
            let x = high.iter().map(|&i| count(i, l)).collect();
            let y = low.iter().map(|&j| count(j, k)).collect();
            cross_deg.insert((k, l), BipartitionedList::new(x, y));
        }
    }

    let parity_violations = same_deg
        .iter()
        .filter(|(_, list)| list.iter().sum::<usize>() % 2 == 1)
        .map(|(&k, _)| k)
        .collect();
    let double_count_violations = cross_deg
        .iter()
        .filter(|(_, b)| b.part_x.iter().sum::<usize>() != b.part_y.iter().sum::<usize>())
        .map(|(&kl, _)| kl)
        .collect();

    Ok(DerivedLists {
        d,
        classes,
        mu,
        same_deg,
        cross_deg,
        parity_violations,
        double_count_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pendant_c4, pendant_c4_ndl};

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn ndl_of_pendant_c4() {
        assert_eq!(ndl_of(&pendant_c4()), pendant_c4_ndl());
        assert_eq!(ndl_of(&Graph::empty(2)), t(&[&[], &[]]));
    }

    #[test]
    fn pendant_variants_differ() {
        // two realizations of (2,2,1,1) one 2-switch apart, plus e adjacent to b and d
        let (a, b, c, d, e) = (0, 1, 2, 3, 4);
        let left = Graph::from_edges(5, [(a, c), (b, d), (c, d), (e, b), (e, d)]).unwrap();
        let right = Graph::from_edges(5, [(a, d), (b, c), (c, d), (e, b), (e, d)]).unwrap();
        let tl = canonicalize(&ndl_of(&left));
        let tr = canonicalize(&ndl_of(&right));
        assert_eq!(tl, t(&[&[2, 2, 2], &[3, 2], &[3, 2], &[3, 1], &[2]]));
        assert_eq!(tr, pendant_c4_ndl());
        assert!(!ndl_equal_unlabeled(&tl, &tr));
        assert!(!ndl_equal_labeled(&ndl_of(&left), &ndl_of(&right)));
    }

    #[test]
    fn canonical_form() {
        let shuffled = t(&[&[3], &[2, 2], &[3, 2], &[3, 2], &[2, 2, 1]]);
        assert_eq!(canonicalize(&shuffled), pendant_c4_ndl());
        assert_eq!(canonicalize(&pendant_c4_ndl()), pendant_c4_ndl());
        assert_eq!(canonicalize(&t(&[&[1], &[1]])), t(&[&[1], &[1]]));
    }

    #[test]
    fn equality() {
        let f = pendant_c4_ndl();
        let resorted = t(&[&[1, 2, 2], &[2, 3], &[2, 3], &[2, 2], &[3]]);
        assert!(ndl_equal_labeled(&f, &resorted));
        let mut rows = f.rows().to_vec();
        rows.swap(0, 1);
        let swapped = Tableau::new(rows);
        assert!(!ndl_equal_labeled(&f, &swapped));
        assert!(ndl_equal_unlabeled(&f, &swapped));
    }

    #[test]
    fn feasibility() {
        assert!(is_feasible(&pendant_c4_ndl()));
        assert!(is_feasible(&t(&[&[2, 2], &[2, 2]])));
        assert!(!is_feasible(&t(&[&[3, 3], &[3, 3]])));
        assert!(is_feasible(&t(&[&[], &[]])));
        assert!(is_feasible(&Tableau::default()));
    }

    #[test]
    fn derive_pendant_c4_ndl() {
        let dl = derive(&pendant_c4_ndl()).unwrap();
        assert_eq!(dl.d, vec![3, 2, 2, 2, 1]);
        assert_eq!(dl.classes[&2], vec![1, 2, 3]);
        assert_eq!(dl.same_deg[&1], vec![0]);
        assert_eq!(dl.same_deg[&2], vec![1, 1, 2]);
        assert_eq!(dl.same_deg[&3], vec![0]);
        let bl = |x: &[usize], y: &[usize]| BipartitionedList::new(x.to_vec(), y.to_vec());
        assert_eq!(dl.cross_deg[&(2, 1)], bl(&[0, 0, 0], &[0]));
        assert_eq!(dl.cross_deg[&(3, 1)], bl(&[1], &[1]));
        assert_eq!(dl.cross_deg[&(3, 2)], bl(&[2], &[1, 1, 0]));
        assert_eq!(dl.cross_deg.len(), 3);
        assert_eq!(dl.mu(0, 2), 2);
        assert_eq!(dl.mu(4, 2), 0);
        assert!(dl.is_consistent());
        assert_eq!(dl.cross_deg[&(3, 2)].to_string(), "(2;1,1,0)");
    }

    #[test]
    fn derive_small() {
        let dl = derive(&t(&[&[1], &[1]])).unwrap();
        assert_eq!(dl.d, vec![1, 1]);
        assert_eq!(dl.classes[&1], vec![0, 1]);
        assert_eq!(dl.same_deg[&1], vec![1, 1]);

        let dl = derive(&t(&[&[], &[], &[]])).unwrap();
        assert_eq!(dl.same_deg[&0], vec![0, 0, 0]);

        assert_eq!(
            derive(&t(&[&[3, 3], &[3, 3]])),
            Err(TableauError::Infeasible { row: 0, entry: 3 })
        );
    }

    #[test]
    fn derive_flags_inconsistency() {
        let dl = derive(&t(&[&[1], &[1], &[1]])).unwrap();
        assert_eq!(dl.parity_violations, vec![1]);
        // row 0 of length 2 sees two 1s, the 1-rows see 2 only once
        let dl = derive(&t(&[&[1, 1], &[2], &[1]])).unwrap();
        assert_eq!(dl.double_count_violations, vec![(2, 1)]);
    }

    #[test]
    fn entry_sums() {
        assert_eq!(ndl_entry_sum(&pendant_c4_ndl()), 22);
        assert_eq!(ndl_entry_sum(&Tableau::default()), 0);
        assert_eq!(ndl_entry_sum(&t(&[&[1], &[1]])), 2);
    }

    #[test]
    fn json_rows_are_sorted_on_read() {
        let t: Tableau = serde_json::from_str("[[1,2,2],[2,3],[3,2],[2,2],[3]]").unwrap();
        assert_eq!(t, pendant_c4_ndl());
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            "[[2,2,1],[3,2],[3,2],[2,2],[3]]"
        );
    }
}
