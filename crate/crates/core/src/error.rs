use thiserror::Error;

/// Crate-wide error type. Every fallible operation reports which
/// precondition failed; arithmetic that cannot fail is infallible.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {0}^{1} is too large")]
    FieldTooLarge(u64, u32),

    #[error("no built-in modulus for p = {0}, s = {1}; supply one explicitly")]
    NoDefaultModulus(u64, u32),

    #[error("modulus is invalid: {0}")]
    BadModulus(String),

    #[error("modulus is reducible (divisible by a polynomial of degree {0})")]
    ReducibleModulus(usize),

    #[error("element index {0} is outside [0, {1})")]
    ElementOutOfRange(u64, u64),

    #[error("operands belong to different fields")]
    MixedFields,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{r} is not a power of the characteristic {p}")]
    NotCharPower { r: u64, p: u64 },

    #[error("series is zero to its known precision; cannot invert")]
    ZeroToPrecision,

    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),

    #[error("invalid parameters: {0}")]
    InvalidInput(String),

    #[error("fixed-point iteration stalled (agreement valuation stopped improving)")]
    ContractionStall,

    #[error("prefix of length {got} is too short; need at least {needed}")]
    PrefixTooShort { needed: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
