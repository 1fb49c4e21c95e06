use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and no inverse")]
    NonInvertibleSeries,

    #[error("{0} is not a discriminant (must be 0 or 1 mod 4, nonzero)")]
    InvalidDiscriminant(i64),

    #[error("-{0} is not a fundamental discriminant")]
    NotFundamental(u64),

    #[error("L(1-{k}, chi) vanishes for discriminant {d} (parity mismatch)")]
    ZeroLValue { k: u32, d: i64 },

    #[error("invalid eta-quotient spec: {0}")]
    BadEtaSpec(String),

    #[error("invalid Eisenstein parameters: {0}")]
    BadEisenstein(String),

    #[error("exponent sum {0} is not a nonnegative multiple of 24; no Fourier expansion in integer powers of q")]
    NoIntegralExpansion(i64),

    #[error("sieved class-number series needs coprime (l1, l2) with l2 squarefree, got ({0}, {1})")]
    BadSievePair(u64, u64),

    #[error("required truncation {0} is out of range")]
    TruncationUnreachable(u64),

    #[error("unknown verification id {0:?}")]
    UnknownVerification(String),

    #[error("bound {got} exceeds the supported maximum {max} for this check")]
    BoundTooLarge { got: u64, max: u64 },

    #[error("{0}")]
    BadArgument(String),
}
