use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must have at least {min} vertices (got {got})")]
    TooSmall { min: usize, got: usize },

    #[error("graphs larger than {max} vertices are not supported (got {got})")]
    TooLarge { max: usize, got: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("eigensolver did not converge")]
    NoConvergence,

    #[error("basis is rank deficient or not orthonormal")]
    RankDeficient,

    #[error("zero vector")]
    ZeroVector,

    #[error("no witness found (enumeration inexact)")]
    EnumerationInexact,

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
