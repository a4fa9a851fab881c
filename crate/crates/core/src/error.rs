use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex `{vertex}` is not in part {expected}")]
    SideMismatch { vertex: String, expected: char },
    #[error("`{0}` is not a walk vertex")]
    NotWalkVertex(String),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(String, String),
    #[error("edge {0} -- {1} has nonpositive weight {2}")]
    NonpositiveWeight(String, String, f64),
    #[error("vertices `{0}` and `{1}` are not connected")]
    Disconnected(String, String),
    #[error("{0}")]
    Domain(String),
    #[error("tree depth {0} is even; the weighted hierarchical route applies there")]
    EvenDepth(usize),
    #[error("layer {0} violates the size/degree consistency constraints")]
    InconsistentLayer(usize),
    #[error("terminal weights are unbalanced: the profile ends at {0} instead of 1")]
    UnbalancedWeights(f64),
    #[error("edge sampling budget exhausted for layer {0}")]
    SamplingFailure(usize),
    #[error("residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    NumericalFailure { residual: f64, tolerance: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid graph file: {0}")]
    InvalidFormat(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
