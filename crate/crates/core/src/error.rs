use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed matrix: row {row} has {found} entries, expected {expected}")]
    MalformedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("expected {expected} divisor classes, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("divisor class has length {found}, tower has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("class is not integral: {0}")]
    NotIntegral(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
