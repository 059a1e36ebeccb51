use thiserror::Error;

/// Errors surfaced by the residue ring, the table builder, the case
/// evaluators and the CLI front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is too small; only primes p > 3 are supported")]
    PrimeTooSmall(u64),

    #[error("prime {0} exceeds the supported range (p < 2^31)")]
    PrimeTooLarge(u64),

    #[error("modulus exponent must be 1 or 2, got {0}")]
    BadExponent(u8),

    #[error("residue {value} is not invertible modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },

    #[error("p = {p} divides the denominator of {value}; not p-integral")]
    PDividesDenominator { p: u64, value: String },

    #[error("prime context is missing the order-{0} harmonic table")]
    MissingOrder(u32),

    #[error("prime {p} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { p: u64, bound: u64 },

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
