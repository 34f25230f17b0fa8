//! Exact combinatorics of edge-colored bipartite graphs.
//!
//! A graph with colors `0..=D` encodes a colored triangulation: vertices are
//! `D`-simplices, edges are facets, and bicolored cycles are `(D-2)`-cells.
//! This crate provides the data model, the `.gem` format, scores, the Gurau
//! degree, jackets, boundary graphs, melonic detection, simplex counts and
//! canonical forms.

pub mod boundary;
pub mod canon;
pub mod census;
pub mod error;
pub mod fixtures;
pub mod gem;
pub mod graph;
pub mod jacket;
pub mod map;
pub mod melonic;
pub mod random;
pub mod score;
pub mod validate;

pub use boundary::{boundary_graph, Boundary};
pub use canon::canonical_form;
pub use census::{euler_check_3d, simplex_census, SimplexCensus};
pub use error::{GraphError, ParseError};
pub use gem::{parse, serialize, to_dot};
pub use graph::{ColoredGraph, Edge, EdgeId, Side, VertexId};
pub use jacket::{jackets, Jacket};
pub use map::{CombinatorialMap, MapError};
pub use melonic::{is_melonic, MelonicWitness};
pub use score::{
    bicolored_cycles, degree_from_jackets, degree_report, gurau_degree, pair_counts, score,
    weighted_score, zero_score, BicoloredCycles, DegreeReport,
};
pub use validate::{validate, RegularityClass, ValidationReport};
