use thiserror::Error;

/// Errors reported by the library.
///
/// Domain errors describe invalid input; `Internal` signals a broken
/// invariant and should never surface on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("{0}")]
    Domain(String),
    #[error("malformed reverse-bumping configuration: {0}")]
    MalformedReverse(String),
    #[error("integer overflow in coefficient arithmetic")]
    Overflow,
    #[error("polynomial is not symmetric in the expansion variables")]
    NotSymmetric,
    #[error("nonzero residual after expansion: {0}")]
    Residual(String),
    #[error("no stabilization up to m = {0}")]
    NoStabilization(usize),
    #[error("degree cap too small: {0}")]
    CapTooSmall(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checked addition on coefficients.
#[inline]
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Checked multiplication on coefficients.
#[inline]
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}
