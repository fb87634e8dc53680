//! JSON wire formats. Field order is fixed by declaration order.

use serde::{Deserialize, Serialize};

use crate::burning::{verify_schedule, BurningSchedule};
use crate::domination::{verify_hop_domination, HopDomWitness};
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::reduction::{Core, ReductionTrace};

/// `{"n": .., "length": .., "centers": [..], "valid": ..}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleWitness {
    pub n: usize,
    pub length: usize,
    pub centers: Vec<Vertex>,
    pub valid: bool,
}

impl ScheduleWitness {
    /// Records the schedule together with a fresh verification against `g`.
    pub fn checked(g: &Graph, s: &BurningSchedule) -> Result<Self> {
        Ok(ScheduleWitness {
            n: g.vertex_count(),
            length: s.len(),
            centers: s.centers().to_vec(),
            valid: verify_schedule(g, s)?,
        })
    }

    pub fn schedule(&self) -> Result<BurningSchedule> {
        BurningSchedule::new(self.centers.clone())
    }
}

/// `{"n": .., "hops": .., "vertices": [..], "valid": ..}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomSetWitness {
    pub n: usize,
    pub hops: usize,
    pub vertices: Vec<Vertex>,
    pub valid: bool,
}

impl DomSetWitness {
    pub fn checked(g: &Graph, w: &HopDomWitness) -> Result<Self> {
        Ok(DomSetWitness {
            n: g.vertex_count(),
            hops: w.hops(),
            vertices: w.vertices().to_vec(),
            valid: verify_hop_domination(g, w)?,
        })
    }

    pub fn hop_witness(&self) -> Result<HopDomWitness> {
        HopDomWitness::new(self.vertices.clone(), self.hops)
    }
}

/// Core edges are written in original labels; loops appear as `[v, v]` and
/// parallel edges repeat.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Core> for CoreJson {
    fn from(core: &Core) -> Self {
        CoreJson {
            vertices: core.labels.clone(),
            edges: core
                .graph
                .edges()
                .into_iter()
                .map(|(u, v)| [core.labels[u], core.labels[v]])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionJson {
    pub n: usize,
    pub core: CoreJson,
    pub trace: ReductionTrace,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("witness serializes")
}
