use thiserror::Error;

/// Errors raised by the cluster algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not divisible: {numerator_terms}-term numerator is not a Laurent multiple of {denominator_terms}-term denominator")]
    NotDivisible { numerator_terms: usize, denominator_terms: usize },

    #[error("invalid seed: {0}")]
    InvalidSeed(String),

    #[error("matrix is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),

    #[error("mutation index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Exact division failed during mutation. This can only happen if the
    /// implementation is wrong, so it is reported with the full mutation
    /// context.
    #[error("Laurent violation after word [{word}] at step {step}: {detail}")]
    LaurentViolation { word: String, step: usize, detail: String },

    #[error("exchange matrix has a directed cycle")]
    NotAcyclic,

    #[error("seed is not isolated (exchange matrix is nonzero)")]
    NotIsolated,

    #[error("exchange graph did not close within {0} seeds")]
    NotFiniteType(usize),

    #[error("cannot freeze index {index}: cluster entry {entry} is not an initial variable")]
    FreezeNonInitial { index: usize, entry: String },

    #[error("seed cluster is not the initial cluster")]
    NotInitialSeed,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
