use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular over C(t,x); the shift action is not invertible")]
    SingularMatrix,
    #[error("gcd of matrix entries with the denominator is not 1 (normalized automatically)")]
    ContentNotCoprime,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("factorization could not be certified complete: {0}")]
    FactorizationIncomplete(String),
    #[error("polynomial is not invariant under the given direction")]
    DirectionMismatch,
    #[error("reduced denominator is not integer-linear; no order bound applies")]
    NotProper,
    #[error("no telescoper exists for this element")]
    NoTelescoperExists,
    #[error("no telescoper found up to order {0}")]
    OrderBoundExceeded(usize),
    #[error("reduction did not terminate within the iteration cap; system is likely not suitable")]
    ReductionDiverged,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
