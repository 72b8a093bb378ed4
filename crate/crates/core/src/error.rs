use thiserror::Error;

/// Errors raised while constructing or querying a gain graph.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("gain modulus {modulus} differs from 1 by more than 1e-9")]
    NotUnitModulus { modulus: f64 },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("gain is not finite")]
    NonFiniteGain,
    #[error("sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("operation requires a connected graph, found {0} components")]
    Disconnected(usize),
}

/// Errors raised by the spectral routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is not Hermitian (symmetry residual {0:e})")]
    NotHermitian(f64),
    #[error("zero tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("edge {0}-{1} carries a gain outside {{1, -1, i, -i}}")]
    NonExactGain(usize, usize),
    #[error("exact characteristic polynomial overflowed 128-bit arithmetic")]
    Overflow,
}

/// Errors raised by the matching routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatchingError {
    #[error("brute-force matching limited to 24 edges, graph has {0}")]
    TooManyEdges(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the theorem checkers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum TheoremError {
    #[error("cycle length {length} is incompatible with type {kind}")]
    ParityMismatch { length: usize, kind: char },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the graph generators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("invalid family: {0}")]
    InvalidSpec(String),
    #[error("no valid graph found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}

/// A line-numbered parse failure in the `gaingraph v1` text format.
#[derive(Debug, Error, Clone, PartialEq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}
