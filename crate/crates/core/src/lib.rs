//! Exact fixed-parameter solvers for Cactus Vertex Deletion and Even Cycle
//! Transversal on multigraphs.
//!
//! The pipeline is iterative compression ([`compression`]) over a
//! branch-and-reduce solver for the disjoint variant ([`disjoint`]). The
//! [`oracle`] module is an exhaustive reference used for cross-checking and
//! [`generator`] builds reproducible test instances.

pub mod cli;
pub mod compression;
pub mod disjoint;
pub mod error;
pub mod generator;
pub mod graph;
pub mod measure;
pub mod oracle;
pub mod recognizer;
pub mod solution;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, MultiGraph, VertexId};
pub use recognizer::ClassMode;
pub use solution::Solution;
