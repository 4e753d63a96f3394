use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("pair type requires two distinct vertices, got ({0}, {0})")]
    SameVertex(usize),

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An existence statement that is supposed to hold unconditionally failed.
    /// Seeing this means a kernel is wrong, not the input.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
