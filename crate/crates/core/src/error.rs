use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Mode, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong when building or querying a signed graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} is not in 1..={n}")]
    UnknownVertex { vertex: Vertex, n: usize },
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("edges {first} and {second} are parallel, which {mode} mode forbids")]
    Parallel {
        first: EdgeId,
        second: EdgeId,
        mode: Mode,
    },
    #[error("switching function covers {got} vertices, graph has {expected}")]
    SwitchingSize { expected: usize, got: usize },
    #[error("orientation does not fit the graph: {0}")]
    Orientation(String),
    #[error("edge {next} does not continue the walk at edge {prev}")]
    NotAWalk { prev: EdgeId, next: EdgeId },
    #[error("graphs do not share an underlying graph: {0}")]
    UnderlyingMismatch(String),
    #[error("invalid tolerance: {0}")]
    Tolerance(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),
    #[error("{what} is limited to {limit}, got {got}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("underlying graph is not regular")]
    NotRegular,
    #[error("operation needs a signed simple graph")]
    NotSimple,
    #[error("walk length must be at least 1")]
    ZeroLength,
    #[error("cycle-space decomposition failed: {0}")]
    Decomposition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn too_large(what: &'static str, limit: usize, got: usize) -> Self {
        Error::TooLarge { what, limit, got }
    }

    pub(crate) fn parse(line: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            msg: msg.to_string(),
        }
    }
}
