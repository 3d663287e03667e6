//! Forgotten topological index (F-index) and Zagreb indices under graph
//! operations.
//!
//! The crate has two independent routes to the same number. The
//! [`ops`] and [`generators`] modules materialize the result graph of an
//! operation explicitly, after which [`graph::f_index`] sums cubed degrees.
//! The [`formulas`] module evaluates the closed forms from operand
//! summaries alone. [`verify`] samples random operands and checks that the
//! two routes agree exactly; [`table`] does the same for the named
//! molecular and nano-structure families.

pub mod edgelist;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod ops;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{
    f_index, f_index_edge_sum, first_zagreb, is_connected, make_graph, second_zagreb, summarize,
    Graph, GraphSummary, IndexValue, RootedGraph,
};
