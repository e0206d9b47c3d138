//! Crate-wide error type.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the fixed adjacency width {MAX_VERTICES}")]
    TooManyVertices(usize),

    #[error("edge endpoint {endpoint} out of range for a graph on {order} vertices")]
    EndpointOutOfRange { endpoint: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph6: body byte {byte:#x} at position {position} outside 63..=126")]
    Graph6ByteOutOfRange { byte: u8, position: usize },

    #[error("graph6: record truncated, expected {expected} body bytes but found {found}")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6: trailing bytes after {expected} body bytes")]
    Graph6TrailingBytes { expected: usize },

    #[error("graph6: unsupported size encoding (only orders below 2^18 are handled)")]
    Graph6UnsupportedSize,

    #[error("graph6: empty record")]
    Graph6Empty,

    #[error("edge list: {0}")]
    EdgeListParse(String),

    #[error("blob list length {blobs} does not match pattern order {pattern}")]
    BlobCountMismatch { blobs: usize, pattern: usize },

    #[error("balanced blob split requires at least one part")]
    ZeroParts,

    #[error("cycle length {0} below 3")]
    CycleLengthTooSmall(usize),

    #[error("vertex sequence {0:?} does not traverse a cycle")]
    NotACycle(Vec<usize>),

    #[error("sequence machinery requires odd cycle length at least 7, got {0}")]
    UnsupportedSequenceLength(usize),

    #[error("repeated vertex in sequence {0:?}")]
    RepeatedVertex(Vec<usize>),

    #[error("A-set {index} is empty for sequence {sequence:?}")]
    EmptyASet { index: usize, sequence: Vec<usize> },

    #[error("cycle {0:?} is not induced")]
    CycleNotInduced(Vec<usize>),

    #[error("prefix {0:?} is not a legal good-sequence prefix")]
    InvalidPrefix(Vec<usize>),

    #[error("observation class requires even length at least 8, got {0}")]
    BadObservationLength(usize),

    #[error("odd-girth constraint requires an odd bound at least 3, got {0}")]
    BadOddGirthBound(usize),

    #[error("built-in exhaustive generation is capped at order {cap}, got {order}")]
    GenerationOrderTooLarge { order: usize, cap: usize },

    #[error("coefficient formula requires odd k > odd l >= 3, got k={k}, l={l}")]
    BadCoefficientParams { k: usize, l: usize },

    #[error("blow-up fit infeasible: pattern {pattern} x blob {blob} too large")]
    FitInfeasible { pattern: usize, blob: usize },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
