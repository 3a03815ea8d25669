use core::fmt;

/// Errors produced by the core algorithms.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A graph must have at least one vertex.
    EmptyGraph,
    /// Vertex index outside `0..n`.
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    /// Edge weights must be finite and strictly positive.
    InvalidWeight {
        u: usize,
        v: usize,
        weight: f64,
    },
    /// The operation needs more vertices than the graph has.
    TooFewVertices {
        needed: usize,
        got: usize,
    },
    /// The normalized Laplacian is undefined on isolated vertices.
    IsolatedVertex {
        vertex: usize,
    },
    Disconnected,
    NonFiniteMatrix,
    /// The QL iteration failed to converge (an internal fault, not an input condition).
    NoConvergence {
        index: usize,
    },
    InvalidClusterCount {
        k: usize,
        n: usize,
    },
    InvalidParameter(&'static str),
    /// The exact oracle refuses graphs larger than its limit.
    OracleLimit {
        n: usize,
        limit: usize,
    },
    /// A contraction tree does not match the graph it is evaluated on.
    TreeMismatch(&'static str),
    /// Configuration-model sampling kept producing non-simple pairings.
    RetriesExhausted {
        attempts: usize,
    },
    DimensionMismatch {
        expected: usize,
        got: usize,
    },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => write!(f, "graph must have at least one vertex"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(
                    f,
                    "vertex {vertex} out of range for graph with {n} vertices"
                )
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::InvalidWeight { u, v, weight } => {
                write!(f, "edge {u}-{v} has invalid weight {weight}")
            }
            Error::TooFewVertices { needed, got } => {
                write!(f, "need at least {needed} vertices, got {got}")
            }
            Error::IsolatedVertex { vertex } => write!(f, "vertex {vertex} is isolated"),
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::NonFiniteMatrix => write!(f, "matrix has non-finite entries"),
            Error::NoConvergence { index } => {
                write!(f, "eigenvalue iteration did not converge at index {index}")
            }
            Error::InvalidClusterCount { k, n } => {
                write!(f, "cannot form {k} clusters from {n} points")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::OracleLimit { n, limit } => {
                write!(f, "exact oracle limited to {limit} vertices, graph has {n}")
            }
            Error::TreeMismatch(msg) => write!(f, "contraction tree does not match graph: {msg}"),
            Error::RetriesExhausted { attempts } => {
                write!(f, "gave up after {attempts} rejected samples")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl core::error::Error for Error {}
