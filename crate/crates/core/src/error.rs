use alloc::string::String;

use thiserror::Error;

/// Errors raised by partition, word, decomposition, series and verification
/// routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("part {value} at position {index} is not a positive integer")]
    NonPositivePart { index: usize, value: i64 },
    #[error("parts are not non-increasing at position {index}")]
    NotNonIncreasing { index: usize },
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(&'static str),
    #[error("boundary word is not balanced around its median")]
    UnbalancedWord,
    #[error("modulus must be a positive integer")]
    InvalidModulus,
    #[error("partition is not a {t}-core")]
    NotACore { t: usize },
    #[error("core vector entries sum to {sum}, expected 0")]
    NonZeroSum { sum: i64 },
    #[error("quotient has {found} components, expected {expected}")]
    QuotientArity { expected: usize, found: usize },
    #[error("partition is not {z}-asymmetric")]
    NotZAsymmetric { z: i64 },
    #[error("invalid class: {0}")]
    InvalidClass(String),
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("constant term must be 1")]
    ConstantTermNotOne,
    #[error("constant term must be 0")]
    ConstantTermNotZero,
    #[error("coefficient index {n} exceeds truncation order {order}")]
    IndexOutOfRange { n: usize, order: usize },
    #[error("Pochhammer start exponent must be at least 1")]
    PochhammerStart,
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("hook {h} has odd multiplicity; halved product undefined")]
    OddMultiplicity { h: usize },
    #[error("hook weight is undefined at {h}")]
    WeightUndefined { h: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
