use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// One malformed field of an input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    /// Dotted path to the field, such as `evaluations.DM1[0][1]`.
    pub path: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported schema_version {found} (this build reads version {supported})")]
    Version { found: i64, supported: i64 },

    #[error("invalid problem file:\n{}", list(.0))]
    Validation(Vec<Issue>),

    #[error(transparent)]
    Core(#[from] hvas_core::Error),

    #[error("cannot write report: {0}")]
    Output(String),
}

fn list(issues: &[Issue]) -> String {
    issues
        .iter()
        .map(|i| format!("  {i}"))
        .collect::<Vec<_>>()
        .join("\n")
}

impl CliError {
    /// Process exit status: 2 for usage errors, 3 for bad input data and 4
    /// for numerically degenerate data.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_degenerate() => 4,
            CliError::Core(
                hvas_core::Error::InvalidParameter { .. } | hvas_core::Error::UnknownMeasure(_),
            ) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
