//! Errors of the SYK crate.

use colgraph_core::GraphError;
use colgraph_pairings::PairingError;
use thiserror::Error;

/// Errors raised by classification, schemes, series and counts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SykError {
    #[error("the bubble is not connected")]
    Disconnected,
    #[error("not a covering: {0}")]
    NotACovering(String),
    #[error("a scheme needs at least one marked corner; unrooted maps are ambiguous")]
    Unrooted,
    #[error("invalid mark: {0}")]
    InvalidMark(String),
    #[error("{pairs} pairs exceed the cap of {cap}")]
    CapExceeded { pairs: usize, cap: usize },
    #[error("unknown generating function {0:?}")]
    UnknownSeries(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}
