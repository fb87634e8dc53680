//! Experiment config: one `key = value` pair per line, `#` starts a comment.
//!
//! ```text
//! family = path
//! params = 4
//! params = 9
//! family = necklace
//! params = 5 3
//! seed = 1
//! seed = 2
//! algorithm = exact
//! algorithm = mindeg-pipeline
//! exact_threshold = 20
//! epsilon = 1/4
//! output = results.csv
//! witness_dir = witnesses
//! ```
//!
//! `params` lines attach to the most recent `family`. The grid is every
//! (family, params) pair crossed with every seed and every algorithm, in
//! file order. `seed` defaults to 0 when absent. Relative `output` and
//! `witness_dir` paths resolve against the config file's directory.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use burnkit::domination::{Epsilon, DEFAULT_EXACT_THRESHOLD};
use burnkit::generators::Seed;

use crate::family::Family;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Exact,
    Greedy,
    Mindeg,
    Weakdeg,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Mindeg => "mindeg-pipeline",
            Algorithm::Weakdeg => "weakdeg-pipeline",
        }
    }
}

impl FromStr for Algorithm {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "exact" => Ok(Algorithm::Exact),
            "greedy" => Ok(Algorithm::Greedy),
            "mindeg-pipeline" => Ok(Algorithm::Mindeg),
            "weakdeg-pipeline" => Ok(Algorithm::Weakdeg),
            _ => Err(CliError::Input(format!("unknown algorithm `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub family: Family,
    pub params: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub graphs: Vec<GraphSpec>,
    pub seeds: Vec<Seed>,
    pub algorithms: Vec<Algorithm>,
    pub exact_threshold: usize,
    pub epsilon: Epsilon,
    pub output: Option<PathBuf>,
    pub witness_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub index: usize,
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Seed,
    pub algorithm: Algorithm,
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut families: Vec<(usize, Family, Vec<Vec<usize>>)> = Vec::new();
        let mut seeds = Vec::new();
        let mut algorithms = Vec::new();
        let mut exact_threshold = None;
        let mut epsilon = None;
        let mut output = None;
        let mut witness_dir = None;

        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let bad = |msg: String| CliError::Input(format!("config line {line_no}: {msg}"));
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected `key = value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let set_once = |slot: &mut Option<String>| {
                if slot.replace(value.to_string()).is_some() {
                    Err(bad(format!("`{key}` given twice")))
                } else {
                    Ok(())
                }
            };
            match key {
                "family" => {
                    let fam: Family = value.parse().map_err(|e: CliError| bad(e.to_string()))?;
                    families.push((line_no, fam, Vec::new()));
                }
                "params" => {
                    let params = value
                        .split(|c: char| c.is_whitespace() || c == ',')
                        .filter(|t| !t.is_empty())
                        .map(|t| t.parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| bad(format!("params: {e}")))?;
                    let (_, _, list) = families
                        .last_mut()
                        .ok_or_else(|| bad("`params` before any `family`".into()))?;
                    list.push(params);
                }
                "seed" => seeds.push(
                    value
                        .parse::<Seed>()
                        .map_err(|e| bad(format!("seed: {e}")))?,
                ),
                "algorithm" => {
                    algorithms.push(value.parse().map_err(|e: CliError| bad(e.to_string()))?)
                }
                "exact_threshold" => set_once(&mut exact_threshold)?,
                "epsilon" => set_once(&mut epsilon)?,
                "output" => set_once(&mut output)?,
                "witness_dir" => set_once(&mut witness_dir)?,
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }

        let mut graphs = Vec::new();
        for (line_no, family, lists) in families {
            if lists.is_empty() {
                return Err(CliError::Input(format!(
                    "config line {line_no}: family `{family}` has no `params` lines"
                )));
            }
            for params in lists {
                if params.len() != family.param_names().len() {
                    return Err(CliError::Input(format!(
                        "family `{family}` takes parameters ({}), got {:?}",
                        family.param_names().join(" "),
                        params
                    )));
                }
                graphs.push(GraphSpec { family, params });
            }
        }
        if !graphs.is_empty() && algorithms.is_empty() {
            return Err(CliError::Input(
                "config has graphs but no `algorithm`".into(),
            ));
        }
        if seeds.is_empty() {
            seeds.push(0);
        }
        let exact_threshold = match exact_threshold {
            Some(v) => v
                .parse()
                .map_err(|e| CliError::Input(format!("exact_threshold: {e}")))?,
            None => DEFAULT_EXACT_THRESHOLD,
        };
        let epsilon = match epsilon {
            Some(v) => v.parse()?,
            None => default_epsilon(),
        };
        Ok(ExperimentConfig {
            graphs,
            seeds,
            algorithms,
            exact_threshold,
            epsilon,
            output: output.map(PathBuf::from),
            witness_dir: witness_dir.map(PathBuf::from),
        })
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let mut cfg = Self::parse(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        cfg.output = cfg.output.map(|p| base.join(p));
        cfg.witness_dir = cfg.witness_dir.map(|p| base.join(p));
        Ok(cfg)
    }

    pub fn grid(&self) -> Vec<GridPoint> {
        let mut points = Vec::new();
        for spec in &self.graphs {
            for &seed in &self.seeds {
                for &algorithm in &self.algorithms {
                    points.push(GridPoint {
                        index: points.len(),
                        family: spec.family,
                        params: spec.params.clone(),
                        seed,
                        algorithm,
                    });
                }
            }
        }
        points
    }
}

pub fn default_epsilon() -> Epsilon {
    Epsilon::new(1, 4).expect("1/4 is in range")
}
