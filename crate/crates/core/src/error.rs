use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("empty burning schedule")]
    EmptySchedule,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no schedule within limit {0}")]
    NoScheduleWithinLimit(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("retry budget exhausted after {0} attempts")]
    RetryBudgetExhausted(usize),

    #[error("precondition violated at vertex {vertex}: {reason}")]
    Precondition { vertex: usize, reason: String },

    #[error("graph too small for non-leaf CDS")]
    GraphTooSmall,

    #[error("invalid reduction trace at step {step}: {reason}")]
    InvalidTrace { step: usize, reason: String },

    #[error("invalid core CDS: {0}")]
    InvalidCds(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
