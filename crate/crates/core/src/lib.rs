//! Weak integer additive set-indexers.
//!
//! A set-indexer labels every vertex of a graph with a finite set of
//! non-negative integers and every edge with the sumset of its endpoint
//! labels. This crate verifies such labelings, builds the graphs they are
//! studied on, computes exact sparing numbers (the fewest edges that must
//! carry singleton labels) with checkable witness labelings, and checks
//! published closed-form sparing formulas against the exact solver.
//!
//! ```
//! use weak_iasi::graph::make_cycle;
//! use weak_iasi::sparing::sparing_exact;
//!
//! let cert = sparing_exact(&make_cycle(5)?)?;
//! assert_eq!(cert.value, 1);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod catalog;
pub mod graph;
pub mod io;
pub mod label;
pub mod sparing;

pub use graph::{Edge, Graph, GraphError, VertexId};
pub use label::{LabelSet, Labeling};
pub use sparing::{Pattern, SparingCertificate};

// Book chapters, compiled as doctests so the guide cannot drift.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/labels.md")]
    mod labels {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/sparing.md")]
    mod sparing {}
    #[doc = include_str!("../../../book/src/concurrent.md")]
    mod concurrent {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
