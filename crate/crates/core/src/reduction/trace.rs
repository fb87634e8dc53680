use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::multigraph::{degree_of, simplify, MultiGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// One reduction, in original vertex labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StepWire", into = "StepWire")]
pub enum ReductionStep {
    /// `v` had degree 1 and was deleted.
    Leaf { v: Vertex, neighbor: Vertex },
    /// `v` had degree 2 with neighbors `x <= y` (equal for a double edge) and
    /// was replaced by an edge `x-y`.
    Smooth { v: Vertex, x: Vertex, y: Vertex },
}

impl ReductionStep {
    pub fn vertex(&self) -> Vertex {
        match *self {
            ReductionStep::Leaf { v, .. } | ReductionStep::Smooth { v, .. } => v,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct StepWire {
    op: String,
    v: Vertex,
    neighbors: Vec<Vertex>,
}

impl From<ReductionStep> for StepWire {
    fn from(s: ReductionStep) -> Self {
        match s {
            ReductionStep::Leaf { v, neighbor } => StepWire {
                op: "leaf".into(),
                v,
                neighbors: vec![neighbor],
            },
            ReductionStep::Smooth { v, x, y } => StepWire {
                op: "smooth".into(),
                v,
                neighbors: vec![x, y],
            },
        }
    }
}

impl TryFrom<StepWire> for ReductionStep {
    type Error = String;

    fn try_from(w: StepWire) -> std::result::Result<Self, String> {
        match (w.op.as_str(), w.neighbors.as_slice()) {
            ("leaf", &[neighbor]) => Ok(ReductionStep::Leaf { v: w.v, neighbor }),
            ("smooth", &[a, b]) => Ok(ReductionStep::Smooth {
                v: w.v,
                x: a.min(b),
                y: a.max(b),
            }),
            (op, nb) => Err(format!(
                "bad trace record: op {op:?} with {} neighbors",
                nb.len()
            )),
        }
    }
}

/// Ordered reductions taking an original graph to its core.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// What is left after reduction: a multigraph on the surviving vertices,
/// relabeled `0..len`, with `labels[i]` the original label of vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub graph: MultiGraph,
    pub labels: Vec<Vertex>,
}

impl Core {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn simple_graph(&self) -> Graph {
        simplify(&self.graph)
    }

    /// Core index of an original label.
    pub fn index_of(&self, original: Vertex) -> Option<usize> {
        self.labels.binary_search(&original).ok()
    }
}

/// Working copy with deletions; keeps original labels.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    adj: Vec<BTreeMap<Vertex, usize>>,
    alive: Vec<bool>,
    alive_count: usize,
}

impl Reducer {
    pub(crate) fn new(g: &MultiGraph) -> Self {
        Reducer {
            adj: g.rows().to_vec(),
            alive: vec![true; g.vertex_count()],
            alive_count: g.vertex_count(),
        }
    }

    pub(crate) fn degree(&self, v: Vertex) -> usize {
        degree_of(v, &self.adj[v])
    }

    pub(crate) fn is_alive(&self, v: Vertex) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub(crate) fn value(&self) -> i64 {
        (0..self.adj.len())
            .filter(|&v| self.alive[v])
            .map(|v| match self.degree(v) {
                1 => -1,
                d if d >= 3 => 1,
                _ => 0,
            })
            .sum()
    }

    /// The reduction that applies to `v` right now, if any.
    fn step_for(&self, v: Vertex) -> Option<ReductionStep> {
        if !self.alive[v] {
            return None;
        }
        let row = &self.adj[v];
        match self.degree(v) {
            1 => {
                let (&neighbor, _) = row.iter().next()?;
                Some(ReductionStep::Leaf { v, neighbor })
            }
            2 if !row.contains_key(&v) => {
                let mut ends = row.iter().flat_map(|(&w, &m)| std::iter::repeat_n(w, m));
                let x = ends.next()?;
                let y = ends.next()?;
                Some(ReductionStep::Smooth { v, x, y })
            }
            _ => None,
        }
    }

    fn detach(&mut self, v: Vertex) {
        let row = std::mem::take(&mut self.adj[v]);
        for (w, _) in row {
            if w != v {
                self.adj[w].remove(&v);
            }
        }
        self.alive[v] = false;
        self.alive_count -= 1;
    }

    /// Applies `step` after checking it matches the current graph.
    pub(crate) fn apply(&mut self, step: &ReductionStep) -> std::result::Result<(), String> {
        let v = step.vertex();
        if !self.is_alive(v) {
            return Err(format!("vertex {v} is not present"));
        }
        match self.step_for(v) {
            Some(actual) if actual == *step => {}
            Some(actual) => return Err(format!("expected {actual:?}, got {step:?}")),
            None => {
                return Err(format!(
                    "vertex {v} has degree {} and is not reducible",
                    self.degree(v)
                ))
            }
        }
        self.detach(v);
        if let ReductionStep::Smooth { x, y, .. } = *step {
            *self.adj[x].entry(y).or_insert(0) += 1;
            if x != y {
                *self.adj[y].entry(x).or_insert(0) += 1;
            }
        }
        Ok(())
    }

    pub(crate) fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub(crate) fn into_core(self) -> Core {
        let labels: Vec<Vertex> = (0..self.adj.len()).filter(|&v| self.alive[v]).collect();
        let mut index = vec![usize::MAX; self.adj.len()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let rows = labels
            .iter()
            .map(|&v| self.adj[v].iter().map(|(&w, &m)| (index[w], m)).collect())
            .collect();
        Core {
            graph: MultiGraph::from_rows(rows),
            labels,
        }
    }
}

fn require_connected(g: &MultiGraph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    simplify(g).require_connected()
}

/// Repeatedly removes degree-1 vertices and smooths degree-2 vertices, always
/// at the smallest eligible index, until the minimum degree is at least 3 or
/// a single vertex is left.
pub fn reduce_to_core(g: &MultiGraph) -> Result<(Core, ReductionTrace)> {
    require_connected(g)?;
    let mut work = Reducer::new(g);
    let mut eligible: BTreeSet<Vertex> = (0..g.vertex_count())
        .filter(|&v| work.step_for(v).is_some())
        .collect();
    let mut trace = ReductionTrace::default();
    while work.alive_count() > 1 {
        let Some(v) = eligible.pop_first() else { break };
        let step = work.step_for(v).expect("eligible vertex is reducible");
        work.apply(&step).expect("step derived from current graph");
        trace.steps.push(step);
        let touched = match step {
            ReductionStep::Leaf { neighbor, .. } => [neighbor, neighbor],
            ReductionStep::Smooth { x, y, .. } => [x, y],
        };
        for w in touched {
            if work.step_for(w).is_some() {
                eligible.insert(w);
            } else {
                eligible.remove(&w);
            }
        }
    }
    Ok((work.into_core(), trace))
}

/// Replays `trace` from `original`, failing on the first step that does not
/// match the graph at that point.
pub fn replay(original: &MultiGraph, trace: &ReductionTrace) -> Result<Core> {
    let mut work = Reducer::new(original);
    for (step, record) in trace.steps.iter().enumerate() {
        work.apply(record)
            .map_err(|reason| Error::InvalidTrace { step, reason })?;
    }
    Ok(work.into_core())
}

/// Graph values along the reduction of `g`, starting with the value of `g`.
pub fn value_sequence(g: &MultiGraph) -> Result<Vec<i64>> {
    let (_, trace) = reduce_to_core(g)?;
    let mut work = Reducer::new(g);
    let mut values = vec![work.value()];
    for record in &trace.steps {
        work.apply(record)
            .expect("trace produced by reduce_to_core");
        values.push(work.value());
    }
    Ok(values)
}

/// True iff the graph value never drops during the reduction of `g`.
pub fn value_monotone_check(g: &MultiGraph) -> Result<bool> {
    Ok(value_sequence(g)?.windows(2).all(|w| w[0] <= w[1]))
}
