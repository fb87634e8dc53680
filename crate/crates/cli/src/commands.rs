//! One function per subcommand. Each returns the text to emit; nothing here
//! touches stdout directly.

use burnkit::burning::{
    burning_number_exact, coverage_lower_bound, greedy_burning, reference_bounds, BurningSchedule,
};
use burnkit::domination::{
    burn_via_mindeg, burn_via_weakdeg_with, connected_2hop_dominating, greedy_cds, nonleaf_cds,
    Epsilon,
};
use burnkit::graph::write_edge_list;
use burnkit::reduction::{reduce_to_core, replay, MultiGraph};
use burnkit::witness::{to_json, CoreJson, DomSetWitness, ReductionJson, ScheduleWitness};
use burnkit::Graph;
use clap::ValueEnum;
use serde_json::json;

use crate::family::Family;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BurnMode {
    Exact,
    Greedy,
    Mindeg,
    Weakdeg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DomMode {
    #[value(name = "2hop")]
    TwoHop,
    CdsNonleaf,
    CdsGreedy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WitnessKind {
    Schedule,
    Domset,
}

pub fn generate(family: Family, params: &[usize], seed: u64) -> CliResult<String> {
    Ok(write_edge_list(&family.build(params, seed)?))
}

/// Schedule for `g` plus a JSON report. The witness is verified before it is
/// returned; a failed check is an internal error. `prune` only affects
/// `weakdeg`.
pub fn burn(
    g: &Graph,
    mode: BurnMode,
    exact_threshold: usize,
    epsilon: Epsilon,
    prune: bool,
) -> CliResult<(ScheduleWitness, String)> {
    let (schedule, report) = match mode {
        BurnMode::Exact | BurnMode::Greedy => {
            let s = if mode == BurnMode::Exact {
                burning_number_exact(g)?.1
            } else {
                greedy_burning(g)?
            };
            let report = json!({
                "mode": if mode == BurnMode::Exact { "exact" } else { "greedy" },
                "n": g.vertex_count(),
                "length": s.len(),
                "lower_bound": coverage_lower_bound(g)?,
            });
            (s, report.to_string())
        }
        BurnMode::Mindeg => {
            let (s, r) = burn_via_mindeg(g, exact_threshold)?;
            (s, to_json(&r))
        }
        BurnMode::Weakdeg => {
            let (s, r) = burn_via_weakdeg_with(g, epsilon, exact_threshold, prune)?;
            (s, to_json(&r))
        }
    };
    let witness = ScheduleWitness::checked(g, &schedule)?;
    if !witness.valid {
        return Err(CliError::Internal(format!(
            "schedule {:?} does not burn the graph",
            witness.centers
        )));
    }
    Ok((witness, report))
}

/// Witness plus, for `2hop`, the growth trace as CSV. `start` defaults to
/// the smallest vertex of maximum degree.
pub fn dominate(
    g: &Graph,
    mode: DomMode,
    start: Option<usize>,
) -> CliResult<(DomSetWitness, Option<String>)> {
    let (set, trace) = match mode {
        DomMode::TwoHop => {
            let start = match start {
                Some(v) => v,
                None => g.max_degree_vertex()?,
            };
            let (w, trace) = connected_2hop_dominating(g, start)?;
            (w, Some(trace.to_csv()))
        }
        DomMode::CdsNonleaf => (nonleaf_cds(g)?, None),
        DomMode::CdsGreedy => (greedy_cds(g)?, None),
    };
    let witness = DomSetWitness::checked(g, &set)?;
    if !witness.valid {
        return Err(CliError::Internal(format!(
            "{:?} is not a connected {}-hop dominating set",
            witness.vertices, witness.hops
        )));
    }
    Ok((witness, trace))
}

pub fn reduce(g: &Graph) -> CliResult<ReductionJson> {
    let original = MultiGraph::from(g);
    let (core, trace) = reduce_to_core(&original)?;
    let replayed =
        replay(&original, &trace).map_err(|e| CliError::Internal(format!("replay: {e}")))?;
    if replayed != core {
        return Err(CliError::Internal(
            "trace replay does not reproduce the core".into(),
        ));
    }
    Ok(ReductionJson {
        n: g.vertex_count(),
        core: CoreJson::from(&core),
        trace,
    })
}

/// `Ok` iff the witness in `text` is valid for `g`. Unparseable witnesses and
/// witnesses for a different vertex count are input errors; well-formed
/// witnesses that fail the check are `InvalidWitness`.
pub fn verify(g: &Graph, kind: WitnessKind, text: &str) -> CliResult<String> {
    let malformed = |e: serde_json::Error| CliError::Input(format!("malformed witness: {e}"));
    let check_n = |n: usize| {
        if n != g.vertex_count() {
            Err(CliError::Input(format!(
                "witness is for n = {n}, graph has {} vertices",
                g.vertex_count()
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        WitnessKind::Schedule => {
            let w: ScheduleWitness = serde_json::from_str(text).map_err(malformed)?;
            check_n(w.n)?;
            let s: BurningSchedule = w.schedule()?;
            if w.length != s.len() {
                return Err(CliError::InvalidWitness(format!(
                    "length {} but {} centers",
                    w.length,
                    s.len()
                )));
            }
            if !ScheduleWitness::checked(g, &s)?.valid {
                return Err(CliError::InvalidWitness(
                    "schedule leaves vertices unburned or repeats a center".into(),
                ));
            }
            Ok(format!("valid burning schedule of length {}\n", s.len()))
        }
        WitnessKind::Domset => {
            let w: DomSetWitness = serde_json::from_str(text).map_err(malformed)?;
            check_n(w.n)?;
            let set = w.hop_witness()?;
            if !DomSetWitness::checked(g, &set)?.valid {
                return Err(CliError::InvalidWitness(format!(
                    "set is not a connected {}-hop dominating set",
                    w.hops
                )));
            }
            Ok(format!(
                "valid connected {}-hop dominating set of size {}\n",
                set.hops(),
                set.len()
            ))
        }
    }
}

pub fn bounds(n: u64, k: u64) -> CliResult<String> {
    Ok(to_json(&reference_bounds(n, k)?))
}
