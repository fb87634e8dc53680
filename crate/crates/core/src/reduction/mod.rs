//! Degree-1 removal and degree-2 smoothing on multigraphs, with a replayable
//! trace and connected-dominating-set lifting back through it.
//!
//! Smoothing keeps parallel edges and loops. In simple-graph semantics,
//! smoothing a vertex whose two neighbors are already adjacent lowers both
//! neighbor degrees and can lower the graph value; with multiplicities kept
//! every surviving degree is unchanged.

mod lift;
mod multigraph;
mod trace;

pub use lift::{lift_cds, prune_cds};
pub use multigraph::{graph_value, simplify, MultiGraph};
pub use trace::{
    reduce_to_core, replay, value_monotone_check, value_sequence, Core, ReductionStep,
    ReductionTrace,
};
