//! Local moves on colored graphs.
//!
//! Dipole insertions and contractions, flips, ρ-pair switchings of color-0
//! edges, connected sums and color-0 edge contractions. Every move returns
//! the new graph with a [`MoveRecord`] holding score changes, a tri-state
//! topology flag, index remaps and the inverse move. Combinatorial handles
//! are detected by [`find_handles`].

pub mod dipole;
pub mod error;
pub mod handles;
mod rebuild;
pub mod record;
pub mod sum;
pub mod switch;

pub use dipole::{contract_color0_edge, dipole_contract, dipole_insert};
pub use error::MoveError;
pub use handles::{find_handles, Handle};
pub use rebuild::certified_sphere;
pub use record::{apply, Move, MoveKind, MoveRecord, TopologyFlag};
pub use sum::{connected_split, connected_sum, join_components};
pub use switch::{flip, rho_switch, separated_colors};
