use thiserror::Error;

/// Errors raised by the algebra kernel and the layers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("division is not allowed in polynomial input (line {line}, column {col})")]
    Division { line: usize, col: usize },
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("invalid variable subset: {0}")]
    InvalidVariableSubset(String),
    #[error("input is not graded: {0}")]
    NotGraded(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("no generic choice found after seeds {seeds:?}: {reason}")]
    Genericity { seeds: Vec<u64>, reason: String },
    #[error("module has rank zero")]
    RankZero,
    #[error("resolution did not terminate within {0} steps")]
    MaxLenExceeded(usize),
    #[error("not a reduction within cap {0}")]
    CapExceeded(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
