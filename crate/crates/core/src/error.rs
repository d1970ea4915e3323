use thiserror::Error;

/// Errors raised by the algebra engine and its front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at r = {r}, s = {s}")]
    Pole { r: String, s: String },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
