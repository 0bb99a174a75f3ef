//! Neighborhood degree lists of simple graphs.
//!
//! The neighborhood degree list (NDL) of a graph records, for every
//! vertex, the multiset of its neighbors' degrees. This crate computes
//! NDLs, decides which tableaux are NDLs, builds realizations, finds
//! N-switch paths between realizations, decides when an NDL has a single
//! labeled realization, and recovers an NDL from a deck of
//! vertex-deleted subgraphs. The [`oracle`] module holds the brute-force
//! enumerations the rest is tested against.
//!
//! ```
//! use ndl_core::{graph::Graph, tableau::ndl_of, realization::realize_ndl};
//!
//! let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let t = ndl_of(&g);
//! assert_eq!(t.rows(), &[vec![2], vec![2, 1], vec![2, 1], vec![2]]);
//! assert_eq!(ndl_of(&realize_ndl(&t).unwrap()), t);
//! ```

pub mod graph;
pub mod graphicality;
pub mod io;
pub mod oracle;
pub mod realization;
pub mod reconstruction;
pub mod tableau;
pub mod uniqueness;

#[cfg(test)]
mod fixtures;

pub use graph::{Graph, TwoSwitch};
pub use graphicality::Partition;
pub use realization::{NSwitch, SwitchPath};
pub use reconstruction::Deck;
pub use tableau::{DerivedLists, Tableau};
