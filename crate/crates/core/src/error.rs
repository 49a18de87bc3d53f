use thiserror::Error;

/// Errors raised by the parameter and bound arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("outside the domain of this operation: {0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
