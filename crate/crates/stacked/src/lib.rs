//! Stacked maps: the bijections between paired colored graphs and maps,
//! face accounting on bicolored submaps, edge-unhooking, boundary graphs,
//! the simplified bijection and quartic melonic gluings.

pub mod boundary;
pub mod dot;
pub mod error;
pub mod map;
pub mod quartic;
pub mod simplified;
pub mod transport;
pub mod unhook;

pub use boundary::{boundary_of_map, MapBoundary};
pub use dot::to_dot;
pub use error::StackedError;
pub use map::{
    psi, psi0, psi_color, psi_inverse, Exploration, StackedMap, SubmapReport, ZeroSubmap,
};
pub use quartic::{
    colorings, connected_maps, order_label, quartic_graph_direct, quartic_map, OrderLabel,
    QuarticDecomposition, QuarticMap,
};
pub use simplified::{simplified_map, SimplifiedMap, SimplifiedVertex};
pub use transport::{bubble_isomorphism, transport_pairings};
pub use unhook::{hook, unhook, Unhooking};
