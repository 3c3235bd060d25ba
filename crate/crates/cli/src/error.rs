use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse degree list {input:?}: {reason}")]
    Degrees { input: String, reason: String },
    #[error("exponent 1 requires --allow-unit")]
    UnitNotAllowed,
    #[error(transparent)]
    Core(#[from] lefschetz_core::Error),
    #[error("method {method} does not apply: {reason}")]
    Inapplicable { method: &'static str, reason: String },
    #[error("cannot read config {path}: {reason}")]
    Config { path: PathBuf, reason: String },
    #[error("missing census parameter --{0}")]
    MissingParameter(&'static str),
    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}
