use crate::models::KeyModel;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("probability distribution must be non-empty")]
    EmptyDistribution,

    #[error("probability {value} at index {index} is outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("probabilities sum to {sum}, expected 1 within {tolerance}")]
    DistributionSum { sum: f64, tolerance: f64 },

    #[error("entropy must be a non-negative finite number of bits, got {0}")]
    NegativeEntropy(f64),

    #[error("final entropy {final_bits} exceeds initial entropy {initial_bits}")]
    InvertedEntropyChange { initial_bits: f64, final_bits: f64 },

    #[error("logarithm base must be greater than 1, got {0}")]
    InvalidBase(f64),

    #[error("state count must be at least 1")]
    ZeroStates,

    #[error("element count must be at least {min}, got {n}")]
    TooFewElements { n: usize, min: usize },

    #[error("n = {n} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("expected a {expected} assignment, got {actual}")]
    WrongModelKind {
        expected: KeyModel,
        actual: KeyModel,
    },

    #[error("key assignment has bits beyond the {key_count} keys of the model")]
    ExcessBits { key_count: usize },

    #[error("element index {index} is out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("input sequence must be non-empty")]
    EmptyInput,

    #[error("sampled mode requires an explicit seed")]
    MissingSeed,

    #[error("sampled mode requires at least one trial")]
    ZeroTrials,

    #[error("comparison depth exceeded the n^2 safety cap (internal search error)")]
    DepthCapExceeded,

    #[error("n range {lo}..{hi} is empty")]
    EmptyRange { lo: usize, hi: usize },

    #[error("malformed report: {0}")]
    MalformedReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
