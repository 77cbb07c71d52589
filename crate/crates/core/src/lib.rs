//! Lossy kernels, exact oracles and hardness gadgets for contracting graphs
//! into cliques, split graphs and chordal graphs.

pub mod approx;
pub mod cli;
pub mod clique_kernel;
pub mod combinatorics;
pub mod gen;
pub mod graph;
pub mod hardness;
pub mod io;
pub mod kernel;
pub mod objective;
pub mod oracles;
pub mod recognize;
pub mod split_kernel;
pub mod witness;

pub use graph::{Edge, EdgeSet, Graph, GraphError, Vertex};
pub use objective::{Objective, TargetClass};
