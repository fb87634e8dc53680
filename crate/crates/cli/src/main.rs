use std::path::PathBuf;
use std::process::ExitCode;

use burnkit::domination::{Epsilon, DEFAULT_EXACT_THRESHOLD};
use burnkit::witness::to_json;
use burnkit_cli::commands::{self, BurnMode, DomMode, WitnessKind};
use burnkit_cli::config::{default_epsilon, ExperimentConfig};
use burnkit_cli::family::Family;
use burnkit_cli::{emit, experiment, read_graph, CliError, CliResult};
use clap::{Parser, Subcommand};

/// Graph burning, connected hop-domination and degree reduction.
///
/// Exit codes: 0 success, 1 invalid input, 2 invalid witness,
/// 3 internal verification failure.
#[derive(Parser)]
#[command(name = "burnkit", version)]
struct Cli {
    /// Seed for the random generator families.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for `experiment` (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest dominating set burned exactly inside the pipelines
    /// [default: 20]
    #[arg(long, global = true)]
    exact_threshold: Option<usize>,
    /// Leaf-fraction parameter for the weak-degree pipeline, `p/q` or a
    /// decimal in (0, 1] [default: 1/4]
    #[arg(long, global = true)]
    epsilon: Option<Epsilon>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Generate {
        /// path, cycle, complete, star, spider, necklace, random-regular,
        /// random-connected or random-tree
        family: Family,
        params: Vec<usize>,
    },
    /// Burn a graph and print the schedule witness.
    Burn {
        #[arg(value_enum)]
        mode: BurnMode,
        graph: PathBuf,
        /// Also write a JSON report with solver details and reference values.
        #[arg(long)]
        report: Option<PathBuf>,
        /// In `weakdeg`, drop redundant vertices from a lifted dominating set.
        #[arg(long)]
        prune: bool,
    },
    /// Compute a connected dominating set (or 2-hop set) witness.
    Dominate {
        #[arg(value_enum)]
        mode: DomMode,
        graph: PathBuf,
        /// For `2hop`, also write the growth trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// For `2hop`, the first vertex of the set [default: smallest vertex
        /// of maximum degree]
        #[arg(long)]
        start: Option<usize>,
    },
    /// Reduce degree-1 and degree-2 vertices and print the core and trace.
    Reduce { graph: PathBuf },
    /// Check a witness file against a graph.
    Verify {
        #[arg(value_enum)]
        kind: WitnessKind,
        graph: PathBuf,
        witness: PathBuf,
    },
    /// Run an experiment config and write its CSV.
    Experiment { config: PathBuf },
    /// Print reference bound values for n vertices and minimum degree k.
    Bounds { n: u64, k: u64 },
}

fn run(cli: Cli) -> CliResult<()> {
    let out = cli.out.as_deref();
    let threshold = cli.exact_threshold.unwrap_or(DEFAULT_EXACT_THRESHOLD);
    let epsilon = cli.epsilon.unwrap_or_else(default_epsilon);
    match cli.command {
        Command::Generate { family, params } => {
            emit(out, &commands::generate(family, &params, cli.seed)?)
        }
        Command::Burn {
            mode,
            graph,
            report,
            prune,
        } => {
            let g = read_graph(&graph)?;
            let (witness, report_json) = commands::burn(&g, mode, threshold, epsilon, prune)?;
            if let Some(path) = report {
                emit(Some(&path), &(report_json + "\n"))?;
            }
            emit(out, &(to_json(&witness) + "\n"))
        }
        Command::Dominate {
            mode,
            graph,
            trace,
            start,
        } => {
            let g = read_graph(&graph)?;
            let (witness, trace_csv) = commands::dominate(&g, mode, start)?;
            match (trace, trace_csv) {
                (Some(path), Some(csv)) => emit(Some(&path), &csv)?,
                (Some(_), None) => {
                    return Err(CliError::Input("--trace is only available for 2hop".into()))
                }
                _ => {}
            }
            emit(out, &(to_json(&witness) + "\n"))
        }
        Command::Reduce { graph } => {
            let g = read_graph(&graph)?;
            emit(out, &(to_json(&commands::reduce(&g)?) + "\n"))
        }
        Command::Verify {
            kind,
            graph,
            witness,
        } => {
            let g = read_graph(&graph)?;
            let text = std::fs::read_to_string(&witness)
                .map_err(|e| CliError::Input(format!("{}: {e}", witness.display())))?;
            emit(out, &commands::verify(&g, kind, &text)?)
        }
        Command::Experiment { config } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if let Some(t) = cli.exact_threshold {
                cfg.exact_threshold = t;
            }
            if let Some(e) = cli.epsilon {
                cfg.epsilon = e;
            }
            let to_stdout = cli.out.is_none() && cfg.output.is_none();
            let (_, csv) = experiment::run(&cfg, cli.threads, cli.out.clone())?;
            if to_stdout {
                print!("{csv}");
            }
            Ok(())
        }
        Command::Bounds { n, k } => emit(out, &(commands::bounds(n, k)? + "\n")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
