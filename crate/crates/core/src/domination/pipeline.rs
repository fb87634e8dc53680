use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{connected_2hop_dominating, greedy_cds, nonleaf_cds, HopDomWitness};
use crate::burning::{
    burning_number_exact, greedy_burning, lift_schedule, reference_bounds, BoundsReport,
    BurningSchedule,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::reduction::{lift_cds, prune_cds, reduce_to_core, MultiGraph};

pub const DEFAULT_EXACT_THRESHOLD: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgraphSolver {
    Exact,
    Greedy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MindegReport {
    pub n: usize,
    pub min_degree: usize,
    pub start: Vertex,
    pub growth_steps: usize,
    pub h_size: usize,
    pub lemma2_bound: i64,
    pub h_solver: SubgraphSolver,
    pub h_schedule_len: usize,
    pub final_len: usize,
    pub bounds: BoundsReport,
}

/// Minimum-degree pipeline: grow a connected 2-hop dominating set `H`, burn
/// `g[H]` (exactly when `|H| <= exact_threshold`, greedily otherwise), then
/// lift with two extra hops. The result has length `b(H) + 2` and is a valid
/// schedule for `g`, an upper bound rather than the burning number.
pub fn burn_via_mindeg(
    g: &Graph,
    exact_threshold: usize,
) -> Result<(BurningSchedule, MindegReport)> {
    g.require_connected()?;
    let start = g.max_degree_vertex()?;
    let (h, trace) = connected_2hop_dominating(g, start)?;
    let (h_schedule, h_solver, lifted) = burn_through(g, &h, exact_threshold)?;
    let n = g.vertex_count();
    let report = MindegReport {
        n,
        min_degree: trace.min_degree,
        start,
        growth_steps: trace.steps.len(),
        h_size: h.len(),
        lemma2_bound: trace.size_bound(n),
        h_solver,
        h_schedule_len: h_schedule.len(),
        final_len: lifted.len(),
        bounds: reference_bounds(n as u64, trace.min_degree as u64)?,
    };
    Ok((lifted, report))
}

fn burn_through(
    g: &Graph,
    h: &HopDomWitness,
    exact_threshold: usize,
) -> Result<(BurningSchedule, SubgraphSolver, BurningSchedule)> {
    let (sub, relabel) = g.induced_subgraph(h.vertices())?;
    let (schedule, solver) = if sub.vertex_count() <= exact_threshold {
        (burning_number_exact(&sub)?.1, SubgraphSolver::Exact)
    } else {
        (greedy_burning(&sub)?, SubgraphSolver::Greedy)
    };
    let lifted = lift_schedule(g, &relabel, &schedule, h.hops())?;
    Ok((schedule, solver, lifted))
}

/// A rational in `(0, 1]`, parsed from `"p/q"` or a decimal such as `"0.25"`.
/// Stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Epsilon {
    num: u64,
    den: u64,
}

impl Epsilon {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 || num > den {
            return Err(Error::InvalidParameter(format!(
                "epsilon must lie in (0, 1], got {num}/{den}"
            )));
        }
        let (mut a, mut b) = (num, den);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        Ok(Epsilon {
            num: num / a,
            den: den / a,
        })
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `ceil(eps * n / 3)`
    pub fn leaf_threshold(self, n: usize) -> usize {
        let top = self.num as u128 * n as u128;
        let bottom = 3 * self.den as u128;
        top.div_ceil(bottom) as usize
    }
}

impl FromStr for Epsilon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse epsilon {s:?}"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            return Epsilon::new(
                p.trim().parse().map_err(|_| bad())?,
                q.trim().parse().map_err(|_| bad())?,
            );
        }
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let frac_val: u64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| bad())?
        };
        let num = int
            .checked_mul(den)
            .and_then(|x| x.checked_add(frac_val))
            .ok_or_else(bad)?;
        Epsilon::new(num, den)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Leaf,
    Reduction,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeakdegReport {
    pub n: usize,
    pub epsilon: f64,
    pub branch: Branch,
    pub leaf_count: usize,
    /// `ceil(eps * n / 3)`
    pub leaf_threshold: usize,
    /// Fraction of vertices whose degree is not 2.
    pub non_two_fraction: f64,
    pub core_size: Option<usize>,
    pub trace_len: Option<usize>,
    pub cds_size: usize,
    /// `(1 - eps/3) n` on the leaf branch, `(1 - eps/12) n` otherwise.
    pub reference_cds_size: f64,
    pub h_solver: SubgraphSolver,
    pub h_schedule_len: usize,
    pub final_len: usize,
    /// `final_len / sqrt(n)`
    pub sqrt_ratio: f64,
}

/// Weak-degree pipeline. With at least `ceil(eps n / 3)` leaves the non-leaf
/// vertices form the dominating set; otherwise the graph is reduced to its
/// core, a greedy CDS of the core is lifted back through the reduction trace.
/// Either way `g[D]` is burned and lifted with one extra hop.
pub fn burn_via_weakdeg(
    g: &Graph,
    epsilon: Epsilon,
    exact_threshold: usize,
) -> Result<(BurningSchedule, WeakdegReport)> {
    burn_via_weakdeg_with(g, epsilon, exact_threshold, false)
}

/// [`burn_via_weakdeg`], optionally running [`prune_cds`] on the lifted set
/// in the reduction branch.
pub fn burn_via_weakdeg_with(
    g: &Graph,
    epsilon: Epsilon,
    exact_threshold: usize,
    prune: bool,
) -> Result<(BurningSchedule, WeakdegReport)> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::GraphTooSmall);
    }
    g.require_connected()?;
    let leaf_count = g.vertices().filter(|&v| g.degree(v) == 1).count();
    let leaf_threshold = epsilon.leaf_threshold(n);
    let non_two = g.vertices().filter(|&v| g.degree(v) != 2).count();

    let (branch, cds, core_size, trace_len) = if leaf_count >= leaf_threshold {
        (Branch::Leaf, nonleaf_cds(g)?, None, None)
    } else {
        let original = MultiGraph::from(g);
        let (core, trace) = reduce_to_core(&original)?;
        let core_cds: Vec<Vertex> = greedy_cds(&core.simple_graph())?
            .vertices()
            .iter()
            .map(|&i| core.labels[i])
            .collect();
        let mut lifted = lift_cds(&trace, &core_cds, &original)?;
        if prune {
            lifted = prune_cds(g, &lifted)?;
        }
        (
            Branch::Reduction,
            HopDomWitness::new(lifted, 1)?,
            Some(core.len()),
            Some(trace.len()),
        )
    };

    let (h_schedule, h_solver, lifted) = burn_through(g, &cds, exact_threshold)?;
    let eps = epsilon.as_f64();
    let shrink = match branch {
        Branch::Leaf => eps / 3.0,
        Branch::Reduction => eps / 12.0,
    };
    let report = WeakdegReport {
        n,
        epsilon: eps,
        branch,
        leaf_count,
        leaf_threshold,
        non_two_fraction: non_two as f64 / n as f64,
        core_size,
        trace_len,
        cds_size: cds.len(),
        reference_cds_size: (1.0 - shrink) * n as f64,
        h_solver,
        h_schedule_len: h_schedule.len(),
        final_len: lifted.len(),
        sqrt_ratio: lifted.len() as f64 / (n as f64).sqrt(),
    };
    Ok((lifted, report))
}
