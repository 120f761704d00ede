use thiserror::Error;

/// Errors raised by model construction, analysis, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order must be at least 1, got {0}")]
    InvalidOrder(u32),

    #[error("order {order} implies {implied} states, exceeding the configured cap of {cap}")]
    StateCapExceeded { order: u32, implied: u128, cap: usize },

    #[error("transition vector has length {got}, expected {expected}")]
    WrongVectorLength { expected: usize, got: usize },

    #[error("probability entry {index} is {value}, outside [0, 1]")]
    ProbabilityOutOfRange { index: usize, value: f64 },

    #[error("source is not ergodic: {0}")]
    NonErgodic(String),

    #[error("source is not reversible but strict mode requires it (|pi_i T_ij - pi_j T_ji| max = {imbalance:e})")]
    NotReversible { imbalance: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("sequence warm-up of {got} bits is shorter than the required {needed}")]
    WarmupTooShort { needed: usize, got: usize },

    #[error("sequence has no emitted bits past the warm-up")]
    EmptySequence,

    #[error("selected subsequence is empty; its bit frequency is undefined")]
    EmptySelection,

    #[error("parameter `{name}` = {value} violates {constraint}")]
    Domain {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("vectors have mismatched lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid experiment configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
