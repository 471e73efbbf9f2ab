use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse weight: {0}")]
    Parse(String),

    #[error("weight entries mix integer and half-integer values")]
    MixedParity,

    #[error("weight must have at least one entry")]
    EmptyWeight,

    #[error("expected {expected} weight, got {got}")]
    WrongParity { expected: &'static str, got: String },

    #[error("weight {0} is not in the required domain: {1}")]
    Domain(String, &'static str),

    #[error("weights have different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("signed sequences live in different lattices ({0:?} vs {1:?})")]
    SignatureMismatch((usize, usize), (usize, usize)),

    #[error("polynomials have different variable counts ({0} vs {1})")]
    VariableCount(usize, usize),

    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("raising operator precondition violated: {0}")]
    Precondition(String),

    #[error("theta has length {got}, expected {expected}")]
    ThetaLength { expected: usize, got: usize },

    #[error("weight {0} is neither totally connected nor totally disconnected")]
    MixedWeight(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
