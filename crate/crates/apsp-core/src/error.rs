use thiserror::Error;

/// Errors produced by graph construction, matrix updates, and queries.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("graph must have at least one node")]
    EmptyGraph,

    #[error("operation requires at least two nodes")]
    TooSmall,

    #[error("node {id} out of range for a graph of {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },

    #[error("self-loop on node {0}: the diagonal is fixed at 0")]
    SelfLoop(usize),

    #[error("edge weights must be non-negative, got {0}")]
    NegativeWeight(f64),

    #[error("weight must be a non-negative number or infinity")]
    NotANumber,

    #[error("invalid weight token '{0}'")]
    BadWeightToken(String),

    #[error("cannot remove the last remaining node")]
    LastNode,

    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("undirected graphs require symmetric edge weights")]
    Asymmetric,

    #[error("diagonal entry of node {0} must be 0")]
    NonZeroDiagonal(usize),

    #[error("matrix is {matrix_n}x{matrix_n} but the graph has {graph_n} nodes")]
    DimensionMismatch { matrix_n: usize, graph_n: usize },

    #[error("source and target must differ, both are {0}")]
    SamePair(usize),

    #[error("density must be in (0, 1], got {0}")]
    BadDensity(f64),

    #[error("delta must be in [0, 1], got {0}")]
    BadDelta(f64),

    #[error("epsilon must be positive, got {0}")]
    BadEpsilon(f64),
}
