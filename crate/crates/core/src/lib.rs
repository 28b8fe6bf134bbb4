//! Prime graphs on conjugacy class sizes: computing Δ(G), recognizing
//! D-groups and block squares, checking the block-square decomposition on
//! concrete groups, and constructing groups with a prescribed block square.

pub mod analysis;
pub mod arith;
pub mod block_square;
pub mod constructor;
pub mod dirichlet;
pub mod error;
pub mod group_engine;
pub mod prime_graph;
pub mod report;
pub mod spec_file;
pub mod spectrum;
pub mod structured;

pub use error::{Error, ErrorCategory, Result};
