use thiserror::Error;

/// Errors produced by the ranking library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid intuitionistic fuzzy number ({mu}, {nu}): {reason}")]
    Domain {
        mu: f64,
        nu: f64,
        reason: &'static str,
    },

    #[error("invalid weight {0}: must be a finite value in [0, 1]")]
    InvalidWeight(f64),

    #[error("weights sum to zero: evaluations are completely vague, new decision makers should be chosen")]
    DegenerateWeights,

    #[error("expertise weights for criterion `{criterion}` sum to zero: new decision makers should be chosen")]
    DegenerateExpertise { criterion: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point does not dominate the reference in coordinate {index} ({value} < {reference})")]
    NotDominating {
        index: usize,
        value: f64,
        reference: f64,
    },

    #[error("non-finite coordinate {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid decision problem: {0}")]
    InvalidProblem(String),

    #[error("unknown distance measure `{0}`")]
    UnknownMeasure(String),

    #[error("degenerate ranking: {0}")]
    Degenerate(String),
}

impl Error {
    /// True for failures caused by numerically degenerate data (all-zero
    /// weights, indistinguishable alternatives) rather than malformed input.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            Error::DegenerateWeights | Error::DegenerateExpertise { .. } | Error::Degenerate(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
