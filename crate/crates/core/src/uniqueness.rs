//! NDL-uniqueness: whether a tableau has exactly one labeled
//! realization.
//!
//! A realizable tableau is NDL-unique exactly when every within-class
//! list is a threshold sequence and every crossing list is a difference
//! pair. Otherwise every one of its realizations admits an N-switch.

use crate::graph::Graph;
use crate::graphicality::{derived_failures, is_difference_pair, is_threshold_sequence, Partition};
use crate::realization::{enumerate_n_switches, NSwitch, RealizationError};
use crate::tableau::{derive, ndl_of, DerivedLists, Tableau};

fn unique_lists(dl: &DerivedLists) -> bool {
    dl.same_deg
        .values()
        .all(|list| is_threshold_sequence(&Partition::from(list.as_slice())))
        && dl.cross_deg.values().all(|list| {
            is_difference_pair(
                &Partition::from(list.part_x.as_slice()),
                &Partition::from(list.part_y.as_slice()),
            )
        })
}

/// Whether the realizable tableau `t` has a unique labeled realization.
pub fn is_ndl_unique_tableau(t: &Tableau) -> Result<bool, RealizationError> {
    let dl = derive(t)?;
    let failures = derived_failures(&dl);
    if !failures.is_empty() {
        return Err(RealizationError::NotGraphicNdl(failures));
    }
    Ok(unique_lists(&dl))
}

/// Whether `g` is the only graph on its vertex set with its labeled NDL.
pub fn is_ndl_unique_graph(g: &Graph) -> bool {
    let dl = derive(&ndl_of(g)).expect("the NDL of a graph is feasible");
    unique_lists(&dl)
}

/// An N-switch on `g` when `g` does not determine its NDL uniquely.
pub fn non_uniqueness_witness(g: &Graph) -> Option<NSwitch> {
    if is_ndl_unique_graph(g) {
        return None;
    }
    enumerate_n_switches(g).into_iter().next()
}
