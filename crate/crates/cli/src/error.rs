use std::path::PathBuf;

use gradedie::error::{PredicateError, SuiteError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}:{line}:{column}: parse error: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {section}: {detail}")]
    Invalid { section: String, detail: String },
    #[error("unknown {kind} {name:?}")]
    UnknownName { kind: &'static str, name: String },
    #[error("{target}: {source}")]
    Predicate {
        target: String,
        #[source]
        source: PredicateError,
    },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub(crate) fn invalid(section: impl Into<String>, detail: impl ToString) -> Self {
        CliError::Invalid {
            section: section.into(),
            detail: detail.to_string(),
        }
    }

    pub(crate) fn parse(origin: &str, text: &str, err: &toml::de::Error) -> Self {
        let offset = err.span().map_or(0, |s| s.start).min(text.len());
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = offset - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        CliError::Parse {
            origin: origin.to_string(),
            line,
            column,
            message: err.message().to_string(),
        }
    }

    /// Process exit status: 2 for engine and usage failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Suite(SuiteError::Integrity { .. }) | CliError::Config(_) => 2,
            _ => 1,
        }
    }
}
