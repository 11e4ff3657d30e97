//! Exact tools for list coloring via independent covers. Large independent
//! sets are turned into kernel-perfect orientations, and exhaustive oracles
//! (offline choosability and the online painting game among them) check the
//! resulting certificates.
//!
//! Everything here is exponential and meant for graphs with a handful of
//! vertices; vertex sets are 64-bit masks.

pub mod error;
pub mod graph;
pub mod harness;
pub mod orient;
pub mod reduce;
pub mod structure;
pub mod table;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{cut_size, Graph};
pub use orient::Digraph;
pub use reduce::Certificate;
pub use table::DegreeTable;
pub use vertex_set::VertexSet;
