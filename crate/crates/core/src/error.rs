use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero has no content decomposition")]
    ZeroContent,
    #[error("not an element of C: {0}")]
    NotInC(String),
    #[error("polynomial syntax error at column {column}: {message}")]
    PolySyntax { column: usize, message: String },
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("atom not allowed here: {0}")]
    InvalidAtom(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unlucky evaluation point: denominator vanishes")]
    UnluckyEvaluation,
    #[error("no value assigned to atom {0}")]
    MissingAssignment(String),
    #[error("inexact division in Z[G]: {0}")]
    InexactDivision(String),
    #[error("series truncated at order {available}, but index {needed} was requested")]
    TruncationExceeded { needed: usize, available: usize },
    #[error("expected a surface (dimension 2), got dimension {0}")]
    NotASurface(usize),
    #[error("{what} must be at most {max}, got {got}")]
    BudgetExceeded { what: &'static str, max: usize, got: usize },
    #[error("irrationality certificates need P_g >= 2, got P_g = {0}")]
    GenusTooSmall(u64),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: u64, got: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("certificate check failed: {0}")]
    CheckFailed(String),
}
