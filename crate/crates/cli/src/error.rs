use std::path::PathBuf;

use thiserror::Error;

/// Exit status of the driver for each failure class.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// Unknown or missing subcommand, unknown flag.
    pub const USAGE: i32 = 2;
    /// A flag or config value that does not parse or is out of range, or an
    /// unreadable config file.
    pub const INVALID_VALUE: i32 = 3;
    /// The output path cannot be written.
    pub const OUTPUT: i32 = 4;
    /// The computation itself failed.
    pub const COMPUTE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("invalid value `{value}` for `{key}`: {reason}")]
    InvalidValue { key: String, value: String, reason: String },

    #[error("config file: {0}")]
    Config(String),

    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Compute(#[from] kpz_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::InvalidValue { .. } | CliError::Config(_) => exit::INVALID_VALUE,
            CliError::Output { .. } => exit::OUTPUT,
            CliError::Compute(_) => exit::COMPUTE,
        }
    }
}
