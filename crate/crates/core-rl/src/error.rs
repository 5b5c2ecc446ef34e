use thiserror::Error;

/// Errors raised by the actor-critic primitives.
#[derive(Debug, Error, PartialEq)]
pub enum RlError {
    #[error("basis dimension {got} does not match parameter dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("discount factor must lie strictly inside (0, 1), got {0}")]
    InvalidGamma(f64),
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
}
