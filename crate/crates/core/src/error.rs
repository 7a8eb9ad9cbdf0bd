use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid simple: {0}")]
    InvalidSimple(String),

    /// `init`, `fin`, cycling and decycling need at least one proper factor.
    #[error("element is a pure power of Δ and has no proper factor")]
    PureDeltaPower,

    #[error("operation requires a circular (single-factor) presentation")]
    NotCircular,

    #[error("operation requires m = ℓ, got G({m},{l})")]
    NotSquare { m: usize, l: usize },

    #[error("unknown reflection group label `{0}`")]
    UnknownLabel(String),

    #[error("word budget exceeded: {needed} words requested, limit is {limit}")]
    BudgetExceeded { needed: u64, limit: u64 },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("malformed braid table line {line}: {reason}")]
    BraidTable { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
