use thiserror::Error;

use crate::ladder::{CrossEdge, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("path lengths must be positive (got m={m}, n={n})")]
    InvalidDimension { m: usize, n: usize },

    #[error("cross edge ({l}, {r}) out of range for a ({m}, {n})-ladder")]
    IndexOutOfRange { l: usize, r: usize, m: usize, n: usize },

    #[error("vertex {side}{index} out of range")]
    VertexOutOfRange { side: Side, index: usize },

    #[error("duplicate cross edge {0}")]
    DuplicateEdge(CrossEdge),

    #[error("cross edge {0} is not in the instance")]
    EdgeNotInInstance(CrossEdge),

    #[error("no certificate exists: {0}")]
    NotApplicable(&'static str),

    #[error("instance is not planar (edge {0} has all four quadrants occupied)")]
    NotPlanar(CrossEdge),

    #[error("instance is not outerplanar")]
    NotOuterplanar,

    #[error("embedding is incomplete: {0}")]
    IncompleteEmbedding(String),

    #[error("instance too large for exact coordinates ({m} x {n})")]
    CoordinateOverflow { m: usize, n: usize },

    #[error("rotation-system search space {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },

    #[error("cannot place {k} distinct cross edges in a ({m}, {n})-ladder")]
    TooManyEdges { m: usize, n: usize, k: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal construction error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
