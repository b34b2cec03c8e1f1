//! Scenario-driven front end for the fourspace library: parse a scenario,
//! dispatch it to the physics modules, and emit a machine-readable report.
//!
//! The binary in this crate is a thin clap wrapper; everything testable
//! lives here so golden-file and acceptance tests can call straight in.

pub mod exec;
pub mod report;
pub mod scenario;

pub use exec::{execute, ExecContext};
pub use report::{CheckResult, Comparison, RunReport, Status};
pub use scenario::{OutputFormat, OutputSpec, Scenario, ScenarioKind, ScenarioParams};

use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced to the user; any of these means exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("scenario parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("unknown scenario kind `{kind}`; known kinds: {known}")]
    UnknownKind { kind: String, known: String },

    #[error("invalid parameters for `{kind}` scenario: {source}")]
    Params {
        kind: &'static str,
        source: serde_json::Error,
    },

    #[error("scenario `{label}`: {reason}")]
    Invalid { label: String, reason: String },

    #[error("scenario `{label}`: {source}")]
    Physics {
        label: String,
        source: fourspace::Error,
    },

    #[error("constants file {path}: {source}")]
    Constants {
        path: PathBuf,
        source: fourspace::Error,
    },

    #[error("particle table {path}: {source}")]
    Table {
        path: PathBuf,
        source: fourspace::Error,
    },

    #[error("reaction file {path}: {source}")]
    Reactions {
        path: PathBuf,
        source: fourspace::Error,
    },

    #[error("wave-state file {path}: {source}")]
    Waves {
        path: PathBuf,
        source: fourspace::Error,
    },
}
