use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("valuation of the zero polynomial is undefined")]
    UndefinedValuation,
    #[error("validation error: {0}")]
    Validation(String),
    #[error("index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is empty")]
    Empty,
    #[error("resource limit exceeded: {what} ({count} > {limit})")]
    Resource { what: &'static str, count: u128, limit: u128 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("integer overflow in exact kernel")]
    Overflow,
}

impl Error {
    pub(crate) fn dim(expected: usize, actual: usize) -> Self {
        Error::Dimension { expected, actual }
    }
}
