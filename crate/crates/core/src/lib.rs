//! Exhaustive experiments on the W_p hierarchy of well-covered graphs.
//!
//! Graphs are small labelled bitset graphs with an active vertex mask, so
//! deletions and localizations keep the original labels.

pub mod canon;
pub mod corpus;
pub mod criticality;
pub mod error;
pub mod graph;
pub mod harness;
pub mod independence;
pub mod par;
pub mod vertex_set;
pub mod wp;

pub use error::{Error, Result};
pub use graph::Graph;
pub use par::Execution;
pub use vertex_set::{VertexSet, MAX_VERTICES};
