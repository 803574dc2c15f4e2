use thiserror::Error;

use crate::graph::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("{n} vertices exceeds the capacity of {capacity}")]
    Capacity { n: usize, capacity: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph is not vertex-critical")]
    NotVertexCritical,

    #[error("vertex {0} is not critical")]
    NotCriticalVertex(usize),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} exceeds the enumeration limit of {limit}")]
    LimitExceeded { what: String, limit: usize },

    #[error("sampler: {0}")]
    Sampler(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors caused by malformed input rather than by a
    /// mathematical precondition of the requested computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Graph6(_) | Error::Capacity { .. } | Error::VertexOutOfRange { .. } | Error::Loop(_)
        )
    }
}
