use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid degree spec: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not square ({rows} rows, expected {cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid generating set: {0}")]
    InvalidGenerators(String),

    #[error("generating set reaches {reached} of {order} vertices")]
    NotGenerating { reached: u64, order: u64 },

    #[error("search space of size {size} exceeds the cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("empty search range: N_min = {min} > N_max = {max}")]
    EmptyRange { min: u64, max: u64 },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
