//! Library half of the `burnkit` binary: command implementations, the
//! experiment config format and the batch runner. `main.rs` only parses
//! arguments and maps errors to exit codes.

pub mod commands;
pub mod config;
pub mod experiment;
pub mod family;

use std::path::Path;

use burnkit::graph::parse_edge_list;
use burnkit::Graph;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("witness rejected: {0}")]
    InvalidWitness(String),
    #[error("internal verification failed: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::InvalidWitness(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<burnkit::Error> for CliError {
    fn from(e: burnkit::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes `text` to `out`, or to stdout when `out` is `None`.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
