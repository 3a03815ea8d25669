use std::path::PathBuf;

use thiserror::Error;

/// Everything the lab can fail with, grouped by process exit code.
#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Domain(#[from] congestion_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl LabError {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        LabError::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        LabError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 usage, 2 domain (including bad input files), 3 invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) => 1,
            LabError::Invariant(_) => 3,
            _ => 2,
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
