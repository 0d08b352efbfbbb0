use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("cannot build monomial order: {0}")]
    OrderConstruction(String),

    #[error("the zero polynomial has no weight")]
    UndefinedWeight,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{value} has no image modulo {modulus}")]
    NotInvertible { value: String, modulus: String },

    #[error("no rational reconstruction of {residue} modulo {modulus}")]
    Reconstruction { residue: String, modulus: String },

    #[error("modulus {0} appears more than once")]
    DuplicateModulus(u64),

    #[error("incompatible prime runs: {0}")]
    Compatibility(String),

    #[error("degenerate extension: {0}")]
    Degenerate(String),

    #[error("characteristic mismatch: ring has characteristic {ring}, requested {requested}")]
    Characteristic { ring: u64, requested: u64 },

    #[error("closure is not a ring: {0}")]
    Inconsistent(String),

    #[error("qth-power iteration did not stabilise within {0} steps")]
    NonTermination(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("no candidate accepted: {0}")]
    Exhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
