use thiserror::Error;

/// Errors surfaced by the library. Internal consistency failures (an exact
/// division with a remainder, two derivations of one series disagreeing) are
/// reported through [`Error::Internal`] and always indicate a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("enumeration of {size} elements exceeds the guard of {limit}; pass an explicit override")]
    GuardExceeded { size: u128, limit: u128 },
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series must have constant term 1 to be inverted")]
    NonUnitConstant,
    #[error("specialization mismatch between series operands")]
    SpecializationMismatch,
    #[error("variables remain after specialization: {0}")]
    Unspecialized(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
