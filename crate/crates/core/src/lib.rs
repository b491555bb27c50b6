//! Graph burning and related contact processes on simple undirected graphs.
//!
//! The crate covers the burning process itself ([`burn`]), exact and
//! polynomial-time solvers ([`exact`], [`poly`], [`approx`]), generators for
//! hardness gadgets with checkable certificates ([`gadgets`]), and the
//! firefighter and bootstrap-percolation processes ([`contact`]).

pub mod approx;
pub mod burn;
pub mod contact;
pub mod exact;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod io;
pub mod poly;

pub use graph::{Graph, GraphError, Vertex};
