use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
    /// A check the command runs on its own output failed.
    #[error("self-test failed: {0}")]
    SelfTest(String),
    #[error(transparent)]
    Model(Box<dyn std::error::Error + Send + Sync>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Csv(_) | CliError::Model(_) => 1,
            CliError::Config(_) => 2,
            CliError::SelfTest(_) => 3,
        }
    }

    pub fn model(e: impl std::error::Error + Send + Sync + 'static) -> Self {
        CliError::Model(Box::new(e))
    }
}
