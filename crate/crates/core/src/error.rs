use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("sequence must contain at least one sample")]
    EmptySequence,

    #[error("sample {index} is not finite")]
    NonFinite { index: usize },

    #[error("{context}: expected length {expected}, got {actual}")]
    LengthMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{name} = {value} is not coprime to {modulus} (gcd = {gcd})")]
    NotCoprime {
        name: String,
        value: i64,
        modulus: i64,
        gcd: i64,
    },

    #[error("{what} = {value} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        value: usize,
        divisor: usize,
    },

    #[error("modulus must be at least 1")]
    ZeroModulus,

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation family is not closed under differences mod {0}")]
    FamilyNotClosed(usize),

    #[error("invalid interlace: {0}")]
    InvalidInterlace(String),

    #[error("{name}[{index}] does not have unit magnitude")]
    NotUnitMagnitude { name: &'static str, index: usize },

    #[error("g_{index} is not a CAZAC sequence")]
    NotCazac { index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
