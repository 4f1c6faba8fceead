use thiserror::Error;

/// Every failure the library reports. The variants line up with the CLI exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoebiusError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("resource guard exceeded: {0}")]
    Guard(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, MoebiusError>;
