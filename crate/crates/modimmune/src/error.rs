use std::path::PathBuf;

use modimmune_core::Error as CoreError;

pub type CliResult<T> = Result<T, CliError>;

/// Failures of a command, grouped by process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Budget(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
}

impl CliError {
    /// 1 usage, 2 data, 3 budget or feasibility.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) | CliError::Io { .. } | CliError::Input { .. } => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> CliError {
        CliError::Io { path: path.into(), source }
    }

    /// Attaches the offending file to a core error raised while reading it.
    pub fn in_file(path: impl Into<PathBuf>, err: CoreError) -> CliError {
        match CliError::from(err) {
            CliError::Data(message) => CliError::Input { path: path.into(), message },
            other => other,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> CliError {
        let message = err.to_string();
        match err {
            CoreError::InvalidParameter(_) => CliError::Usage(message),
            CoreError::Infeasible(_) | CoreError::BudgetExhausted { .. } => CliError::Budget(message),
            _ => CliError::Data(message),
        }
    }
}
