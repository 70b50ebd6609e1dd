//! Exact solvers for Johan (J) and modified Johan (J*) colourings of small
//! simple graphs, the graph operations they are studied under, extremal
//! edge-removal quantities, and a claim-verification harness.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod ops;
pub mod rainbow;
pub mod verify;

pub use error::{Error, Result};
