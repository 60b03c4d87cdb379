use std::path::PathBuf;

use grasschar_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cache entry {path} differs from a fresh computation")]
    CacheMismatch { path: PathBuf },
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Exit status: 2 for bad invocations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                CoreError::InvalidParams(_)
                | CoreError::UnsupportedT(_)
                | CoreError::UnknownClaim(_)
                | CoreError::Parse { .. }
                | CoreError::UnknownVariable(_),
            ) => 2,
            _ => 1,
        }
    }
}
