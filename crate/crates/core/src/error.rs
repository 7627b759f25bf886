use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..65536")]
    NotPrime(u64),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u32, u32),
    #[error("objects belong to different rings")]
    ContextMismatch,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("Groebner basis computation exceeded the S-pair budget of {0}")]
    PairBudgetExceeded(u64),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("ideal is the unit ideal")]
    UnitIdeal,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("zero ideal not allowed here")]
    ZeroIdeal,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("exact division failed: internal invariant violated")]
    DivisionFailure,
    #[error("{path}:{line}:{column}: {message}")]
    Session {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
