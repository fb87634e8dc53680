use super::{burn_slack, uncovered_vertices, verify_schedule, BurningSchedule};
use crate::error::{Error, Result};
use crate::graph::{Graph, Relabeling};

/// Turns a schedule for the induced subgraph `g[H]` into one for `g`, where
/// every vertex of `g` lies within `hops` of `H`.
///
/// The subgraph centers keep their order and gain `hops` radius each, which
/// is enough because distances in `g` never exceed distances in `g[H]`. The
/// `hops` extra tail positions get filler centers: the unused vertex whose
/// ball holds the most still-uncovered vertices, smallest index on ties.
pub fn lift_schedule(
    g: &Graph,
    relabel: &Relabeling,
    h_schedule: &BurningSchedule,
    hops: usize,
) -> Result<BurningSchedule> {
    let h_vertices = relabel.original_vertices();
    for &c in h_schedule.centers() {
        if c >= relabel.len() {
            return Err(Error::Precondition {
                vertex: c,
                reason: format!("center outside the {}-vertex subgraph", relabel.len()),
            });
        }
    }
    let (h, _) = g.induced_subgraph(h_vertices)?;
    if let Some(&u) = uncovered_vertices(&h, h_schedule)?.first() {
        return Err(Error::Precondition {
            vertex: relabel.to_old(u),
            reason: "not burned by the subgraph schedule".into(),
        });
    }
    if !verify_schedule(&h, h_schedule)? {
        return Err(Error::Precondition {
            vertex: relabel.to_old(h_schedule.centers()[0]),
            reason: "subgraph schedule repeats a center".into(),
        });
    }
    let dist = g.multi_source_bfs(h_vertices)?;
    if let Some(v) = g.vertices().find(|&v| dist.get(v).is_none_or(|d| d > hops)) {
        return Err(Error::Precondition {
            vertex: v,
            reason: format!("farther than {hops} hops from the subgraph"),
        });
    }

    let b = h_schedule.len();
    let mut centers: Vec<usize> = h_schedule
        .centers()
        .iter()
        .map(|&c| relabel.to_old(c))
        .collect();
    let mut used = vec![false; g.vertex_count()];
    for &c in &centers {
        used[c] = true;
    }
    let mut covered: Vec<bool> = burn_slack(
        g,
        centers
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, b - 1 - i + hops)),
    )
    .into_iter()
    .map(|s| s >= 0)
    .collect();

    for r in (0..hops).rev() {
        let any_unused = used.iter().any(|u| !u);
        let candidates = g.vertices().filter(|&v| !any_unused || !used[v]);
        let filler = if covered.iter().all(|&c| c) {
            candidates.min().unwrap()
        } else {
            let mut best = (0usize, usize::MAX);
            for c in candidates {
                let gain = g.ball(c, r)?.iter().filter(|&&v| !covered[v]).count();
                if best.1 == usize::MAX || gain > best.0 {
                    best = (gain, c);
                }
            }
            best.1
        };
        for v in g.ball(filler, r)? {
            covered[v] = true;
        }
        used[filler] = true;
        centers.push(filler);
    }

    let lifted = BurningSchedule::new(centers)?;
    debug_assert!(verify_schedule(g, &lifted)?);
    Ok(lifted)
}
