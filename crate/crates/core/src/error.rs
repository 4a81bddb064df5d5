use thiserror::Error;

pub type Result<T, E = AduError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AduError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("rational function has a pole at q = sqrt({base})")]
    PoleAtSqrt { base: u64 },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("exponent {exponent} lies outside the invertible range (s = {s}, t = {t})")]
    SupportViolation { exponent: i64, s: i64, t: i64 },
    #[error("operands belong to algebras with different signatures")]
    SignatureMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("size guard: construction needs {requested} elements, limit is {limit}")]
    SizeGuard { requested: u128, limit: u64 },
    #[error("{0}")]
    Gated(String),
    #[error("dual polar graph is disconnected")]
    Disconnected,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for AduError {
    fn from(e: std::io::Error) -> Self {
        AduError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for AduError {
    fn from(e: serde_json::Error) -> Self {
        AduError::Parse(e.to_string())
    }
}
