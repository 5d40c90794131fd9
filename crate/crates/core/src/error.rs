use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("leading coefficient is not a unit")]
    NonInvertibleLeadingTerm,
    #[error("bad valuation: expected {expected}, got {got}")]
    BadValuation { expected: i64, got: i64 },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },
    #[error("cap {cap} too small, need {needed}")]
    CapTooSmall { needed: i64, cap: i64 },
    #[error("order u^{order} lies below the series floor {floor}")]
    StabilityRange { order: i64, floor: i64 },
    #[error("(n, k) = ({n}, {k}) is outside the stable range")]
    Unstable { n: usize, k: i64 },
    #[error("fit failed: {0}")]
    FitFailed(String),
    #[error("sample lies on a pole: {0}")]
    SampleAtPole(String),
    #[error("invalid knot parameters: {0}")]
    InvalidKnot(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
