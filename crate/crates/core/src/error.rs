//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {value} lies outside [0, 1]")]
    DegreeOutOfRange { value: String },
    #[error("cannot parse degree from {input:?}: {reason}")]
    DegreeParse { input: String, reason: String },
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate universe label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("operands belong to different universes")]
    UniverseMismatch,
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not an equivalence relation: {reason}")]
    NotAnEquivalence { reason: String },
    #[error("precondition violated: {reason}")]
    PreconditionViolated { reason: String },
    #[error("universe has {size} elements; subset enumeration is capped at {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("lattice has {size} elements; exhaustive subset check is capped at {cap}")]
    LatticeTooLarge { size: usize, cap: usize },
    #[error("alpha must satisfy 0 < alpha <= 1")]
    InvalidAlpha,
    #[error("not a lattice: {reason}")]
    NotALattice { reason: String },
    #[error("cross-check failed: {detail}")]
    CrossCheckFailed { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
