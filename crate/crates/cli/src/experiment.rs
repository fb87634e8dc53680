//! Batch runner. Grid points run on a rayon pool; rows are collected in grid
//! order, so the CSV does not depend on the worker count.

use std::path::{Path, PathBuf};
use std::time::Instant;

use burnkit::burning::{burning_number_exact, greedy_burning, reference_bounds, BurningSchedule};
use burnkit::domination::{burn_via_mindeg, burn_via_weakdeg};
use burnkit::witness::{to_json, ScheduleWitness};
use burnkit::Graph;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Algorithm, ExperimentConfig, GridPoint};
use crate::{CliError, CliResult};

pub const COLUMNS: [&str; 14] = [
    "family",
    "params",
    "seed",
    "n",
    "min_degree",
    "algorithm",
    "result_length_or_size",
    "lemma2_bound",
    "sqrt_ceil",
    "thm1_ref",
    "bonato_upper",
    "wall_time_ms",
    "valid",
    "error",
];

/// Empty cells mean "not computed", usually because the graph could not be
/// built or the algorithm failed; `error` then says why.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Row {
    pub family: String,
    pub params: String,
    pub seed: u64,
    pub n: Option<usize>,
    pub min_degree: Option<usize>,
    pub algorithm: String,
    pub result_length_or_size: Option<usize>,
    pub lemma2_bound: Option<i64>,
    pub sqrt_ceil: Option<u64>,
    pub thm1_ref: Option<u64>,
    pub bonato_upper: Option<u64>,
    pub wall_time_ms: String,
    pub valid: bool,
    pub error: String,
}

pub struct Outcome {
    pub point: GridPoint,
    pub row: Row,
    pub witness: Option<ScheduleWitness>,
}

fn solve(
    g: &Graph,
    algorithm: Algorithm,
    cfg: &ExperimentConfig,
) -> burnkit::Result<BurningSchedule> {
    Ok(match algorithm {
        Algorithm::Exact => burning_number_exact(g)?.1,
        Algorithm::Greedy => greedy_burning(g)?,
        Algorithm::Mindeg => burn_via_mindeg(g, cfg.exact_threshold)?.0,
        Algorithm::Weakdeg => burn_via_weakdeg(g, cfg.epsilon, cfg.exact_threshold)?.0,
    })
}

pub fn run_point(point: &GridPoint, cfg: &ExperimentConfig) -> Outcome {
    let params: Vec<String> = point.params.iter().map(usize::to_string).collect();
    let mut row = Row {
        family: point.family.to_string(),
        params: params.join(" "),
        seed: point.seed,
        n: None,
        min_degree: None,
        algorithm: point.algorithm.name().to_string(),
        result_length_or_size: None,
        lemma2_bound: None,
        sqrt_ceil: None,
        thm1_ref: None,
        bonato_upper: None,
        wall_time_ms: String::new(),
        valid: false,
        error: String::new(),
    };
    let g = match point.family.build(&point.params, point.seed) {
        Ok(g) => g,
        Err(e) => {
            row.error = e.to_string();
            return Outcome {
                point: point.clone(),
                row,
                witness: None,
            };
        }
    };
    let n = g.vertex_count();
    row.n = Some(n);
    if let Ok(k) = g.min_degree() {
        row.min_degree = Some(k);
        if let Ok(b) = reference_bounds(n as u64, k as u64) {
            row.lemma2_bound = Some(b.lemma2_size);
            row.sqrt_ceil = Some(b.sqrt_ceil);
            row.thm1_ref = Some(b.thm1_ref);
            row.bonato_upper = Some(b.bonato_upper);
        }
    }

    let started = Instant::now();
    let result = solve(&g, point.algorithm, cfg);
    row.wall_time_ms = format!("{:.3}", started.elapsed().as_secs_f64() * 1e3);
    let witness = match result.and_then(|s| ScheduleWitness::checked(&g, &s)) {
        Ok(w) => w,
        Err(e) => {
            row.error = e.to_string();
            return Outcome {
                point: point.clone(),
                row,
                witness: None,
            };
        }
    };
    row.result_length_or_size = Some(witness.length);
    row.valid = witness.valid;
    if !witness.valid {
        row.error = "internal verification failed".into();
    }
    Outcome {
        point: point.clone(),
        row,
        witness: Some(witness),
    }
}

/// Runs every grid point on a pool of `threads` workers (0 = one per core).
pub fn run_grid(cfg: &ExperimentConfig, threads: usize) -> CliResult<Vec<Outcome>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let grid = cfg.grid();
    Ok(pool.install(|| grid.par_iter().map(|p| run_point(p, cfg)).collect()))
}

pub fn to_csv(outcomes: &[Outcome]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Internal(format!("csv: {e}"));
    w.write_record(COLUMNS).map_err(fail)?;
    for o in outcomes {
        w.serialize(&o.row).map_err(fail)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// File name for a grid point's witness, unique within one run.
pub fn witness_file_name(point: &GridPoint) -> String {
    let params: Vec<String> = point.params.iter().map(usize::to_string).collect();
    format!(
        "{:05}_{}_{}_s{}_{}.json",
        point.index,
        point.family,
        params.join("-"),
        point.seed,
        point.algorithm.name()
    )
}

pub fn write_witnesses(dir: &Path, outcomes: &[Outcome]) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    for o in outcomes {
        if let Some(w) = &o.witness {
            let path = dir.join(witness_file_name(&o.point));
            std::fs::write(&path, to_json(w) + "\n")
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(())
}

/// Runs the grid and writes the CSV to `output` (or returns it for stdout
/// when there is no output path), plus witness files if configured.
pub fn run(
    cfg: &ExperimentConfig,
    threads: usize,
    output: Option<PathBuf>,
) -> CliResult<(Vec<Outcome>, String)> {
    let outcomes = run_grid(cfg, threads)?;
    let text = to_csv(&outcomes)?;
    if let Some(path) = output.or_else(|| cfg.output.clone()) {
        crate::emit(Some(&path), &text)?;
    }
    if let Some(dir) = &cfg.witness_dir {
        write_witnesses(dir, &outcomes)?;
    }
    Ok((outcomes, text))
}
