use super::multigraph::MultiGraph;
use super::trace::{replay, ReductionStep, ReductionTrace};
use crate::domination::{verify_hop_domination, HopDomWitness};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Lifts a connected dominating set of the reduced graph back through the
/// trace, undoing one step at a time.
///
/// For each restored vertex `v`: if the current set already holds a neighbor
/// of `v`, add `v`; otherwise add the smallest neighbor of `v`. Each step
/// grows the set by exactly one vertex and keeps it a connected dominating
/// set, so the result has `|core_cds| + trace.len()` vertices.
///
/// `core_cds` is given in original labels and must be a connected dominating
/// set of the simplified core that `trace` produces from `original`.
pub fn lift_cds(
    trace: &ReductionTrace,
    core_cds: &[Vertex],
    original: &MultiGraph,
) -> Result<Vec<Vertex>> {
    let core = replay(original, trace)?;
    if core_cds.is_empty() {
        return Err(Error::InvalidCds("empty set".into()));
    }
    let mut local = Vec::with_capacity(core_cds.len());
    for &v in core_cds {
        let i = core
            .index_of(v)
            .ok_or_else(|| Error::InvalidCds(format!("vertex {v} is not in the core")))?;
        local.push(i);
    }
    let witness = HopDomWitness::new(local, 1)?;
    if !verify_hop_domination(&core.simple_graph(), &witness)? {
        return Err(Error::InvalidCds(
            "not a connected dominating set of the core".into(),
        ));
    }

    let mut member = vec![false; original.vertex_count()];
    for &v in core_cds {
        member[v] = true;
    }
    for step in trace.steps.iter().rev() {
        let added = match *step {
            ReductionStep::Leaf { v, neighbor } => {
                if member[neighbor] {
                    v
                } else {
                    neighbor
                }
            }
            ReductionStep::Smooth { v, x, y } => {
                if member[x] || member[y] {
                    v
                } else {
                    x
                }
            }
        };
        debug_assert!(!member[added]);
        member[added] = true;
    }
    Ok((0..member.len()).filter(|&v| member[v]).collect())
}

/// Drops vertices from a connected dominating set of `g` while it stays one.
/// Scans in index order and repeats until a full pass removes nothing, since
/// a removal can turn an earlier cut vertex into a removable end.
pub fn prune_cds(g: &Graph, set: &[Vertex]) -> Result<Vec<Vertex>> {
    let mut kept = HopDomWitness::new(set.to_vec(), 1)?;
    if !verify_hop_domination(g, &kept)? {
        return Err(Error::InvalidCds(
            "input is not a connected dominating set".into(),
        ));
    }
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < kept.len() && kept.len() > 1 {
            let mut rest = kept.vertices().to_vec();
            rest.remove(i);
            let candidate = HopDomWitness::new(rest, 1)?;
            if verify_hop_domination(g, &candidate)? {
                kept = candidate;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            return Ok(kept.vertices().to_vec());
        }
    }
}
