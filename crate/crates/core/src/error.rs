use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A level or neighbourhood exceeded one of the configured [`Caps`](crate::Caps).
    #[error("{what} {value} exceeds the configured cap {cap}")]
    Capacity {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("closed neighbourhood of vertex {vertex} has {size} vertices, above the clique cap {cap}")]
    NeighborhoodCapacity {
        vertex: String,
        size: usize,
        cap: usize,
    },

    #[error("partitions of different sizes: {left} and {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("invalid partition literal {literal:?}: {reason}")]
    PartitionLiteral { literal: String, reason: String },

    #[error("template {location}: {message}")]
    Template { location: String, message: String },

    #[error("{0}")]
    Usage(String),

    /// A check that a proved statement guarantees has failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::InvariantViolation(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
