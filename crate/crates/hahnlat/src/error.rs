use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("unsupported degree {degree} (bound {max})")]
    UnsupportedDegree { degree: u32, max: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("coefficient table has no entry {0}")]
    Table(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("factor search budget exhausted: {0}")]
    SearchBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
