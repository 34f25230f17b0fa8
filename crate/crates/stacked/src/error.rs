//! Errors of the stacked-map crate.

use colgraph_core::GraphError;
use colgraph_pairings::PairingError;
use thiserror::Error;

/// Errors raised by the bijections and map operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StackedError {
    #[error("graph is not closed: {0}")]
    NotClosed(String),
    #[error("pair {0} straddles two bubbles")]
    PairAcrossBubbles(usize),
    #[error("a bubble of the graph matches no given bubble type")]
    UnknownBubble,
    #[error("color {color} out of range 0..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("corner {0} cannot be unhooked: {1}")]
    NotUnhookable(usize, String),
    #[error("square {0} cannot be hooked: {1}")]
    NotHookable(usize, String),
    #[error("simplified bijection does not apply: {0}")]
    NotSimplifiable(String),
    #[error("bubble is not quartic melonic: {0}")]
    NotQuartic(String),
    #[error("more than one marked corner on a color-0 vertex")]
    TooManyMarks,
    #[error("no marked corner")]
    NoMarks,
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
