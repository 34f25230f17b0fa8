//! Unicellular coverings of the complex colored SYK model.
//!
//! A covering is classified by its order `δ₀`, the circuit rank of its
//! stacked map. Pruning removes tree contributions, and collapsing chains of
//! degree-two vertices leaves a scheme. Chains and rooted contributions are
//! counted by exact generating functions, cross-checked against
//! brute-force enumeration of labeled coverings.

pub mod count;
pub mod error;
pub mod gf;
pub mod map;
pub mod scheme;
pub mod series;

pub use count::{count_by_order, count_by_scheme, OrderCount, MAX_PAIRS};
pub use error::SykError;
pub use gf::{
    chain_gf, composite_gf, tree_series, two_point_nlo_terms, ChainGf, ChainKind, CompositeGf,
};
pub use map::{bubble_connected_without, canonical_completion, classify_order, Corner, SykMap};
pub use scheme::{
    prune, to_scheme, ChainEdge, MapEdge, NloShape, NodeKind, PrunedMap, Scheme, SchemeNode,
};
pub use series::PowerSeries;
