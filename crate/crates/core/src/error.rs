use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {message} (byte {offset})")]
    Graph6 { offset: usize, message: String },

    #[error("pseudograph json: {0}")]
    Json(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("graph is not simple: entry ({u},{v}) = {value}")]
    NotSimple { u: usize, v: usize, value: u32 },

    #[error("unknown graph '{name}'; available: {available}")]
    UnknownGraph { name: String, available: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not walk-regular: {0}")]
    NotWalkRegular(String),

    #[error("graphs are not cospectral")]
    NotCospectral,

    #[error("size bound exceeded: {0}")]
    SizeBound(String),

    #[error("isomorphism search exceeded its budget of {0} nodes")]
    SearchBudget(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A precondition of a domain operation failed (for example a graph that
    /// is not h-punctually cospectral handed to mate generation).
    #[error("refused: {0}")]
    Refused(String),

    /// Two independent routes that must agree did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn g6(offset: usize, message: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            message: message.into(),
        }
    }
}
