use crate::exact::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded along an improving ray")]
    Unbounded { ray: Vec<Rational> },

    #[error("{0}")]
    NotABasis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("step budget of {0} exhausted")]
    Budget(u64),

    #[error("iteration cap of {cap} exceeded ({detail})")]
    IterationCap { cap: u64, detail: String },

    #[error("general-position audit failed: {0}")]
    Audit(String),

    #[error("a guaranteed property failed to hold: {0}")]
    TheoremViolation(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("too large for exhaustive enumeration: {0}")]
    SizeGuard(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn audit(msg: impl Into<String>) -> Self {
        Error::Audit(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
