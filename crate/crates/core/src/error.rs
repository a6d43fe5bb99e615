use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NovaError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("missing companion map: {0}")]
    MissingCompanion(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("r-matrix is not factorizable")]
    NotFactorizable,
    #[error("search budget exceeded: {count} candidates (limit {limit})")]
    BudgetExceeded { count: u128, limit: u128 },
    #[error("support has {found} entries (limit {limit})")]
    SupportTooLarge { found: usize, limit: usize },
    #[error("too many parameters: {found} (limit {limit})")]
    TooManyParameters { found: usize, limit: usize },
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = NovaError> = std::result::Result<T, E>;
