use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A Pochhammer denominator `(γ)_j` vanished inside a terminating sum.
    #[error(
        "pole in terminating hypergeometric sum: gamma = {gamma} makes (gamma)_{index} vanish"
    )]
    Pole { gamma: String, index: u32 },

    /// Halving the finite-difference step changed the residual by more than
    /// the allowed factor; the step is outside the asymptotic regime.
    #[error("finite-difference step {step:e} too large: halving changed the residual by a factor {ratio:.3}")]
    StepTooLarge { step: f64, ratio: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two independent computation paths disagreed.
    #[error("path mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
