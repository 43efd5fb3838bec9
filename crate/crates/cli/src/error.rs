use thiserror::Error;

/// Everything the command line can fail with. Each variant maps to exit code 2;
/// mathematical disagreement is reported through output, not through this type.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] cdkernel::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type CliResult<T> = Result<T, CliError>;
