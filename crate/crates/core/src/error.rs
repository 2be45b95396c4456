use thiserror::Error;

use crate::graph::{Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: Vertex, n: usize },

    #[error("vertex {0} listed more than once")]
    DuplicateVertex(Vertex),

    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),

    /// An input lies outside the domain of the requested operation.
    #[error("{0}")]
    Domain(String),

    /// An operation was invoked on a value that does not satisfy its precondition.
    #[error("contract violated: {0}")]
    Contract(String),

    #[error("scale limit exceeded: {0}")]
    Scale(String),

    #[error("not a cograph: vertices {0:?} induce a P4")]
    NotCograph([Vertex; 4]),

    /// The search ran out of budget. `lower_bound` is only a lower bound on the
    /// true value; `witness` attains it.
    #[error("search budget exhausted after {nodes} nodes; best lower bound {lower_bound}")]
    BudgetExhausted {
        lower_bound: usize,
        witness: VertexSet,
        nodes: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
