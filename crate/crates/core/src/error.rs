use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate pair {{{0},{1}}}")]
    DuplicatePair(usize, usize),

    #[error("vertex {0} is isolated (degree 0); D^-1/2 is undefined")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("graph needs at least {required} vertices, has {actual}")]
    TooFewVertices { required: usize, actual: usize },

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("not a simple cycle: {0}")]
    NotACycle(String),

    #[error("edge {{{0},{1}}} is not in the graph")]
    MissingEdge(usize, usize),

    #[error("gain {0} is not a sixth root of unity")]
    Unclassified(String),

    #[error("gain views are defined on different underlying graphs")]
    MismatchedGraphs,

    #[error("matrix is not Hermitian at ({0},{1})")]
    NotHermitian(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("n = {n} exceeds the {what} cap of {cap}; use the numeric route")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
