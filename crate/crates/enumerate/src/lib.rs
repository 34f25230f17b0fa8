//! Exhaustive enumeration of gluings of bubbles along color 0.
//!
//! Gluings are enumerated by color-0 matchings over copies of bubbles, in
//! parallel and in a deterministic order. On top of the engine sit maximal
//! 0-score sets, empirical scaling exponents, linear bound certificates,
//! tree-like decompositions, exact series solutions and cube gluings.

pub mod cube;
pub mod error;
pub mod gluing;
pub mod maximal;
pub mod series;
pub mod treelike;

pub use cube::{four_cube_gluings, four_vertex_graph, reachable_scores, CubeGluing, CUBE_EXCLUDED};
pub use error::EnumError;
pub use gluing::{
    automorphism_count, count_gluings, dedup_canonical, enumerate_gluings, fold_matchings,
    gluings_at, rooted_melonic_count, Gluing, GluingCounts, GluingSpec, Placement, RootingMode,
    DEFAULT_CAP,
};
pub use maximal::{
    coefficients_enumerated, empirical_tilde_a, is_tree_gluing, maximal_set, melonic_cap,
    optimal_scores, verify_linear_bound, BoundCertificate, MaximalLevel, MaximalSet,
    TildeAEstimate,
};
pub use series::{
    satisfies_equation, series_solve, singular_point, verify_singular_point, SeriesSpec,
    SeriesTerm, SingularPoint,
};
pub use treelike::{
    decompose, theta_patterns, tree_like_check, Decomposition, PatternSet, TreeLikeReport,
};
