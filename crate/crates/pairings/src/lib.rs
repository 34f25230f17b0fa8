//! Pairings of bubbles, the closed graphs they cover, optimal pairings and
//! the scaling coefficients derived from them.

pub mod coeff;
pub mod contracted;
pub mod error;
pub mod optimal;
pub mod pairing;

pub use coeff::{
    coefficients, coefficients_nonconnected, coefficients_with_cap, CoefficientReport, Evidence,
};
pub use contracted::{contracted_graph, delta0, lm, ContractedGraph};
pub use error::PairingError;
pub use optimal::{forced_pairs, optimal_pairings, OptimalPairings, DEFAULT_CAP};
pub use pairing::{
    covering, enumerate_pairings, pairing_from_color, require_bubble, Layout, Pairing,
};
