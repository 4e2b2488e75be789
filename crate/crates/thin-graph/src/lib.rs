//! Core graph types shared by the thinness toolkit.
//!
//! Vertices are dense indices `0..n`. Adjacency rows are packed bitsets: a
//! single `u64` per row when `n <= 64`, several words otherwise.

mod digraph;
mod enumerate;
mod error;
mod graph;
pub mod io;
mod order;

pub use digraph::{Digraph, TopoOutcome};
pub use enumerate::{
    canonical_code, connected_graphs, from_canonical_code, nonisomorphic_graphs, ConnectedGraphs, MAX_ENUM_N,
};
pub use error::GraphError;
pub use graph::Graph;
pub use order::{Partition, Representation, VertexOrder};
