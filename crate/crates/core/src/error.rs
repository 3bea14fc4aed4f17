use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width {k} does not divide height {big_k}")]
    NotDivisible { big_k: usize, k: usize },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("partition {partition} has more than {k} rows")]
    TooManyRows { partition: String, k: usize },
    #[error("split is not admissible: {0}")]
    NonAdmissible(String),
    #[error("content {0:?} is not allowable")]
    NonAllowable(Vec<usize>),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("reduction not applicable: {0}")]
    ReductionNotApplicable(String),
    #[error("{what} = {value} exceeds the cap {cap}")]
    SizeGuard { what: &'static str, value: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
