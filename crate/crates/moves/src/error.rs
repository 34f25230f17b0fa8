//! Errors of the moves crate.

use colgraph_core::GraphError;
use thiserror::Error;

/// Errors raised when a move does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("not a dipole: {0}")]
    NotADipole(String),
    #[error("color mismatch: {0}")]
    ColorMismatch(String),
    #[error("edges have different colors {0} and {1}")]
    ColorsDiffer(usize, usize),
    #[error("edges are not incident to the two vertices of a dipole")]
    NotIncidentToDipole,
    #[error("the two edges coincide")]
    SameEdge,
    #[error("edge {0} does not have color 0")]
    NotColorZero(usize),
    #[error("edge {0} lies inside one bubble")]
    InternalEdge(usize),
    #[error("both vertices lie on the same side")]
    SameSide,
    #[error("both vertices lie in the same connected component")]
    SameComponent,
    #[error("graphs differ in dimension or color set")]
    DimensionMismatch,
    #[error("dipole cannot be inserted: {0}")]
    NotInsertable(String),
    #[error("edges do not form a separating cut: {0}")]
    NotAnEdgeCut(String),
    #[error("edge {0} is marked")]
    Marked(usize),
    #[error("cannot parse move: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
