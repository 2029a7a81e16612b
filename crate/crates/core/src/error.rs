use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable table mismatch: {0}")]
    TableMismatch(String),
    #[error("duplicate variable name `{0}` in table")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("image of odd variable `{0}` must consist of odd-degree terms only")]
    OddImage(String),
    #[error("image of even variable `{0}` must consist of even-degree terms only")]
    EvenImage(String),
    #[error("polynomial is not homogeneous of ordinary degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("series precondition violated: {0}")]
    Series(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("hypotheses not satisfied: {0}")]
    Hypothesis(String),
    #[error("linear system has no solution: {0}")]
    Infeasible(String),
    #[error("model self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
