use thiserror::Error;

/// Everything that can go wrong inside the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("characteristic must be 0 or a prime below 2^31, got {0}")]
    BadCharacteristic(i64),
    #[error("field mismatch: characteristic {left} vs {right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable space mismatch")]
    SpaceMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("line {line}: {msg}")]
    Definition { line: usize, msg: String },
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a Laurent monomial: {0}")]
    NotMonomial(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("substitution hits a pole: {0}")]
    Pole(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
