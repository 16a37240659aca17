use thiserror::Error;

/// Errors surfaced by the exact-computation layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("family `{family}` provides {len} coefficients; alpha_{n} is out of range")]
    AlphaOutOfRange { family: String, n: usize, len: usize },

    #[error("Lah numbers require n >= k >= 1 (got n={n}, k={k})")]
    LahIndex { n: u32, k: u32 },

    #[error("derivative order {ell} exceeds min(n, k) for n={n}, k={k}")]
    DerivativeOrder { n: usize, k: i64, ell: usize },

    #[error("family `{0}` does not assert the reflection relation")]
    ReflectionNotAsserted(String),

    #[error("reflection relation fails for family `{family}` at n={n}: {identity}")]
    ReflectionViolated {
        family: String,
        n: usize,
        identity: String,
    },

    #[error("coefficient at position {pos} is nonzero above the index {index}")]
    CoefficientAboveIndex { pos: usize, index: usize },

    #[error("a truncation order is required when k < n (k={k}, n={n})")]
    OrderRequired { k: i64, n: usize },

    #[error("evaluation at 0 hits a pole: negative exponents are present")]
    PoleAtZero,

    #[error(
        "power sums in Faulhaber form require odd n; the even case needs an extra factor and is not supported"
    )]
    EvenPowerSum,

    #[error("cannot parse `{0}` as an exact rational")]
    InvalidRational(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("cannot read family file `{path}`: {reason}")]
    FamilyFile { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
