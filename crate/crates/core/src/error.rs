use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex capacity exceeded: {requested} > {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("cannot split isolated vertex {0}")]
    IsolatedVertex(usize),

    #[error("splitting family exceeds cap of {cap} members")]
    FamilyCapExceeded { cap: usize },

    #[error("payload on {payload} vertices does not fit in a class of size {class}")]
    PayloadTooLarge { payload: usize, class: usize },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("graph is not bipartite with the given side")]
    NotBipartite,

    #[error("graph on {order} vertices exceeds exact-search bound {bound}")]
    SizeBoundExceeded { order: usize, bound: usize },

    #[error("outside the theorem's hypotheses: {0}")]
    OutsideTheorem(String),

    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),

    #[error("invalid forbidden family: {0}")]
    InvalidFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
