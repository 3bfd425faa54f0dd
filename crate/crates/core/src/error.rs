use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the substitution point {point}")]
    EvaluationPole { point: String },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("operation requires a {expected} space, got {found}")]
    WrongSpaceKind { expected: &'static str, found: String },
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("highest vector is not unique: common kernel has dimension {dim}")]
    NonCyclic { dim: usize },
    #[error("partition {shape} is not contained in the ({m},{n})-hook: {reason}")]
    NotInHook { shape: String, m: usize, n: usize, reason: String },
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("T(u-kappa)T^t(u) is not scalar: entry {witness}")]
    NotScalar { witness: String },
    #[error("consistency condition fails at index {index}")]
    Inconsistent { index: usize },
    #[error("polynomial has irrational roots: remainder {remainder}")]
    IrrationalRoots { remainder: String },
    #[error("no polynomial solution: {0}")]
    NoSolution(String),
    #[error("Qbar and Q have different degrees after reduction ({qbar} vs {q})")]
    DegreeMismatch { qbar: usize, q: usize },
    #[error("resource bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
