use crate::graph::Graph;
use crate::tableau::Tableau;

/// A 4-cycle with a pendant vertex, labeled so that its NDL rows come
/// out in canonical order: a=0, b=1, d=2, c=3, e=4.
pub(crate) fn pendant_c4() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 3), (3, 2), (2, 0), (0, 4)]).unwrap()
}

pub(crate) fn pendant_c4_ndl() -> Tableau {
    Tableau::new(vec![
        vec![2, 2, 1],
        vec![3, 2],
        vec![3, 2],
        vec![2, 2],
        vec![3],
    ])
}

pub(crate) fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}
