//! Connected hop-dominating sets and the burning pipelines built on them.

mod cds;
mod growth;
mod pipeline;

pub use cds::{greedy_cds, nonleaf_cds};
pub use growth::{connected_2hop_dominating, GrowthStep, GrowthTrace};
pub use pipeline::{
    burn_via_mindeg, burn_via_weakdeg, burn_via_weakdeg_with, Branch, Epsilon, MindegReport,
    SubgraphSolver, WeakdegReport, DEFAULT_EXACT_THRESHOLD,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A vertex set `H` claimed to induce a connected subgraph with every vertex
/// of the host graph within `hops` of it. `hops = 1` is a connected
/// dominating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopDomWitness {
    vertices: Vec<Vertex>,
    hops: usize,
}

impl HopDomWitness {
    /// Sorts and deduplicates `vertices`.
    pub fn new(mut vertices: Vec<Vertex>, hops: usize) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        vertices.sort_unstable();
        vertices.dedup();
        Ok(HopDomWitness { vertices, hops })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn hops(&self) -> usize {
        self.hops
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn verify_hop_domination(g: &Graph, w: &HopDomWitness) -> Result<bool> {
    let (h, _) = g.induced_subgraph(w.vertices())?;
    if !h.is_connected()? {
        return Ok(false);
    }
    let dist = g.multi_source_bfs(w.vertices())?;
    Ok(dist.max_distance().is_some_and(|d| d <= w.hops()))
}
