//! Errors of the enumeration crate.

use colgraph_core::GraphError;
use colgraph_pairings::PairingError;
use colgraph_stacked::StackedError;
use thiserror::Error;

/// Errors raised by enumeration and series solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{blacks} black vertices exceed the cap of {cap}")]
    CapExceeded { blacks: usize, cap: usize },
    #[error("invalid gluing spec: {0}")]
    InvalidSpec(String),
    #[error("series has no power-series solution: {0}")]
    InconsistentSeries(String),
    #[error("cannot parse series: {0}")]
    ParseSeries(String),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Stacked(#[from] StackedError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
