//! Zero blocking numbers of graphs.
//!
//! A *fort* of a graph is a non-empty vertex set `W` such that no vertex
//! outside `W` has exactly one neighbor in `W`; the zero blocking number
//! `B(G)` is the minimum size of a fort. This crate computes it exhaustively
//! ([`exact`]), in linear time on trees ([`tree_dp`]), and from closed forms
//! and composition rules ([`formulas`], [`hypercube`]). The [`reduction`]
//! module builds the vertex-cover gadget that makes the problem hard on
//! bipartite and chordal graphs.

pub mod corpus;
pub mod count;
pub mod error;
pub mod exact;
pub mod forcing;
pub mod formulas;
pub mod graph;
pub mod hypercube;
pub mod reduction;
pub mod rng;
mod search;
pub mod tree_dp;
pub mod vertex_set;

pub use count::ExtendedCount;
pub use error::{Error, Result};
pub use graph::{Family, Graph, RootedGraph, Vertex};
pub use vertex_set::VertexSet;
