//! Exact tools for divisible design graphs: constructions, recognition,
//! parameter-level spectra and vertex connectivity with checkable
//! certificates.

pub mod analysis;
pub mod connectivity;
pub mod constructions;
pub mod graph;
pub mod linalg;
pub mod switching;

pub use analysis::{recognize_ddg, verify_ddg, DdgParams, Partition, Recognition};
pub use graph::{Graph, VertexSet};
pub use linalg::IntMatrix;
