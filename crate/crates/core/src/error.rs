use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field too large for desk-scale arithmetic (q = {0})")]
    FieldTooLarge(u64),
    #[error("encoding {value} out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("operands belong to different fields")]
    CrossField,
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate node {0}")]
    DuplicateNode(u32),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has {rows} rows, expected {expected}")]
    RowCount { rows: usize, expected: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("polynomial degree {degree} exceeds the allowed maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error(
        "instance too large for the exhaustive oracle: needs {required} operations, cap is {cap}"
    )]
    BudgetExceeded { required: u128, cap: u64 },
    #[error("hypotheses not satisfied: {0}")]
    Hypothesis(String),
    #[error("{0} is not an excluded point of the code")]
    NotExcluded(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
