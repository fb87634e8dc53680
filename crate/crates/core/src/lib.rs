//! Graph burning toolkit: exact and heuristic burning schedules, connected
//! hop-dominating sets, degree-1/degree-2 reductions, and the pipelines that
//! bound the burning number through them.

pub mod burning;
pub mod domination;
mod error;
pub mod generators;
pub mod graph;
pub mod reduction;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
