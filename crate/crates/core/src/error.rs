use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {index} out of range for graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("edge {0} is not in the graph")]
    UnknownEdge(Edge),

    #[error("edge {0} was already inserted into the oracle")]
    DuplicateInsert(Edge),

    #[error("configuration has {got} points, graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    #[error("k = {k} outside the admissible range 1..={max}")]
    KOutOfRange { k: usize, max: usize },

    #[error("side length must be positive and finite, got {0}")]
    InvalidSide(f64),

    #[error("point {index} lies outside the square of side {side}")]
    PointOutsideSquare { index: usize, side: f64 },

    #[error("invalid sensing radius {0}")]
    InvalidRadius(f64),

    #[error("bad ratio grid: {0}")]
    BadGrid(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
