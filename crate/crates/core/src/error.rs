use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot specialize q at 0: q is invertible")]
    ZeroSpecialization,

    #[error("denominator vanishes at q = {0}")]
    DenominatorVanishes(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid algebra shape: {0}")]
    InvalidShape(String),

    #[error("generator {0} is out of range for this algebra")]
    IndexOutOfRange(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("operation requires {expected}")]
    WrongAlgebra { expected: &'static str },

    #[error("invalid minor: {0}")]
    InvalidMinor(String),

    #[error("element is not a coinvariant: word {witness} has weight {weight}")]
    NotCoinvariant { witness: String, weight: i64 },

    #[error("invalid ideal pair: {0}")]
    InvalidPair(String),

    #[error("size cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    /// Short machine-readable kind, used in CLI and FFI error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroSpecialization => "zero_specialization",
            Error::DenominatorVanishes(_) => "denominator_vanishes",
            Error::ZeroDenominator => "zero_denominator",
            Error::InvalidScalar(_) => "invalid_scalar",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidShape(_) => "invalid_shape",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::WrongAlgebra { .. } => "wrong_algebra",
            Error::InvalidMinor(_) => "invalid_minor",
            Error::NotCoinvariant { .. } => "not_coinvariant",
            Error::InvalidPair(_) => "invalid_pair",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Syntax { .. } => "syntax",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Json(_) => "json",
        }
    }
}
