use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element belongs to a different ring")]
    RingMismatch,

    #[error("resource limit: {what} has {size} elements, enumeration bound is {bound}")]
    ResourceLimit { what: String, size: usize, bound: usize },

    #[error("grading decomposition fails at {witness}: {reason}")]
    GradingDecomposition { witness: String, reason: String },

    #[error("grading axiom fails: {left} * {right} = {product} lands in the wrong degree")]
    GradingAxiom { left: String, right: String, product: String },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A structural theorem check failed. This is never expected and signals a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("graded ring is not strongly graded")]
    NotStronglyGraded,

    #[error("graded ring is not a graded field")]
    NotGradedField,
}

pub type Result<T> = std::result::Result<T, Error>;
