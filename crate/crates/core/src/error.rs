//! Error types for graph construction, parsing and analysis.

use thiserror::Error;

/// Errors raised while building or analysing a colored graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("unknown edge index {0}")]
    UnknownEdge(usize),
    #[error("color {color} out of range 0..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("duplicate color {color} at vertex {vertex}")]
    DuplicateColor { vertex: usize, color: usize },
    #[error("edge {0}-{1} joins two vertices of the same side")]
    NonBipartite(usize, usize),
    #[error("only color-0 edges can be marked (edge {0})")]
    MarkedNonZero(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not regular in its colors: {0}")]
    NotRegular(String),
    #[error("colors must differ, got {0} twice")]
    SameColor(usize),
    #[error("wrong dimension: expected {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("graph has {black} black and {white} white vertices")]
    Unbalanced { black: usize, white: usize },
}

/// Errors raised by the `.gem` parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {text}")]
    Malformed { line: usize, text: String },
    #[error("missing or malformed header line")]
    MissingHeader,
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}
