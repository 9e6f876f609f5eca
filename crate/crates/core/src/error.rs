use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at theta = {0}")]
    PoleAtTheta(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dominance comparison needs equal weights ({0} vs {1})")]
    WeightMismatch(usize, usize),
    #[error("cell ({0},{1}) is not in the diagram")]
    CellOutOfDiagram(usize, usize),
    #[error("partition {0} is not contained in the fat ({1},{2})-hook")]
    NotInFatHook(String, usize, usize),
    #[error("conversion involving the {0} basis needs the Jack machinery")]
    UnsupportedHere(&'static str),
    #[error("theta is not generic here: {0}")]
    NonGenericTheta(String),
    #[error("{0} is not contained in {1}")]
    NotContained(String, String),
    #[error("{0} is not obtained from {1} by adding one box")]
    InvalidStep(String, String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("partition of length {0} needs at least that many variables, got {1}")]
    TooFewVariables(usize, usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("polynomial is not in the deformed algebra: {0}")]
    NotInAlgebra(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
