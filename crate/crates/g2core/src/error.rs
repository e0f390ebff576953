use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("index {index} outside 1..=7")]
    IndexOutOfRange { index: usize },
    #[error("expected a {expected}-form, found a {found}-form")]
    GradeMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("operation needs rational entries but got a parameterized value: {0}")]
    Parameterized(String),
    #[error("not in g2: {0}")]
    NotInG2(String),
    #[error("generators do not close under the bracket: {0}")]
    NotClosed(String),
    #[error("generators are linearly dependent")]
    Dependent,
    #[error("not invariant: {0}")]
    NotInvariant(String),
    #[error("operator is not scalar on the invariant spinors: {0}")]
    NotScalar(String),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("Jacobi identity fails on {count} basis triples, first ({i}, {j}, {k})")]
    Jacobi { count: usize, i: usize, j: usize, k: usize },
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
