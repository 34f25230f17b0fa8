//! Errors of the pairings crate.

use colgraph_core::GraphError;
use thiserror::Error;

/// Errors raised by pairing construction and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("not a bubble: {0}")]
    NotBubble(String),
    #[error("pairing does not match the graph: {0}")]
    Mismatched(String),
    #[error("{pairs} pairs exceed the search cap of {cap}")]
    CapExceeded { pairs: usize, cap: usize },
    #[error("no component reports given")]
    NoComponents,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
