//! Exact orientable genus for small two-terminal graphs, the critical
//! classes built on it, and the connectivity-2 torus obstructions.

pub mod catalog;
pub mod criticality;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod torus;

pub use error::{Error, Result};
