use thiserror::Error;

use crate::graph::Sign;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph order must be at least 1")]
    EmptyGraph,

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("vertices {0:?} must be pairwise distinct")]
    NotDistinct(Vec<usize>),

    #[error("edge {}{} must be {expected} but is {actual}", edge.0, edge.1)]
    SignPrecondition {
        edge: (usize, usize),
        expected: Sign,
        actual: Sign,
    },

    #[error("{what} exceeds capacity: {got} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NumericFailure { sweeps: usize, off_norm: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}
