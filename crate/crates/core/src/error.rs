use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("no such edge {0}")]
    NoSuchEdge(Edge),
    #[error("terminals must be distinct vertices")]
    EqualTerminals,
    #[error("contraction of xy forbidden")]
    ContractXy,
    #[error("parts must avoid xy")]
    PartsMustAvoidXy,
    #[error("graph contains the edge xy")]
    XyPresent,
    #[error("trace requires connected graph")]
    Disconnected,
    #[error("rotation system does not match the graph: {0}")]
    BadRotation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("classification violation: {0}")]
    ClassificationViolation(String),
    #[error("catalog: {0}")]
    Catalog(String),
    #[error("count mismatch: {0}")]
    CountMismatch(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
