use thiserror::Error;

/// Errors produced by matroid construction and the exchange algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} is out of range for a ground set of size {ground}")]
    ElementOutOfRange { element: usize, ground: usize },

    #[error("set {index} is not a basis")]
    NotABasis { index: usize },

    #[error("seed set is not a subset of the first basis")]
    SeedNotSubset,

    #[error("element {0} is not in the first basis")]
    NotInBasis(usize),

    #[error("ground size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("base exchange axiom violated: {0}")]
    AxiomViolated(String),

    #[error("instance generation failed after {attempts} attempts: {reason}")]
    Generation { attempts: usize, reason: String },

    /// An internal consistency check failed. This indicates a bug, never bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
