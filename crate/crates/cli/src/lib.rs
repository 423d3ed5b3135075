//! Serialization, fixtures and subcommand drivers for the `bimonad` binary.

pub mod codec;
pub mod commands;
pub mod fixtures;

use thiserror::Error;

/// Input errors. Each one ends a run with exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("{path}: invalid JSON at line {line}, column {column}: {message}")]
    Json { path: String, line: usize, column: usize, message: String },

    #[error("{path}: {source}")]
    Input { path: String, source: bimonad::Error },

    #[error("{0}")]
    Usage(String),
}
