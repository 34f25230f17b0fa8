//! Structural validation reports.

use crate::graph::{ColoredGraph, Side};

/// Regularity class of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularityClass {
    /// Every vertex carries every color `0..=D`.
    Closed,
    /// Every vertex carries the colors `1..=D` and no color 0.
    Bubble,
    /// All colors `1..=D` everywhere, with `q` black and `q` white vertices
    /// missing color 0 (marked edges count as missing).
    Boundary { q: usize },
    /// None of the above.
    Irregular,
}

/// Outcome of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub bipartite: bool,
    pub balanced: bool,
    pub class: RegularityClass,
    pub connected: bool,
    pub components: usize,
    pub marked: usize,
}

impl ValidationReport {
    /// True when the graph is usable as a closed graph, a bubble or a
    /// boundary-case graph.
    pub fn is_valid(&self) -> bool {
        self.bipartite && self.balanced && self.class != RegularityClass::Irregular
    }
}

/// Reports bipartiteness, regularity class and connectivity.
pub fn validate(g: &ColoredGraph) -> ValidationReport {
    let d = g.dimension();
    let bipartite = g
        .edges()
        .iter()
        .all(|e| g.side(e.black) == Side::Black && g.side(e.white) == Side::White);
    let black = g.blacks().count();
    let balanced = 2 * black == g.vertex_count();
    let full = g
        .vertices()
        .all(|v| (1..=d).all(|c| g.edge_at(v, c).is_some()));
    let any_zero = g.edges().iter().any(|e| e.color == 0);
    let missing: Vec<_> = g
        .vertices()
        .filter(|&v| g.live_edge_at(v, 0).is_none())
        .collect();
    let class = if !full {
        RegularityClass::Irregular
    } else if !any_zero {
        RegularityClass::Bubble
    } else if missing.is_empty() {
        RegularityClass::Closed
    } else {
        let q = missing
            .iter()
            .filter(|&&v| g.side(v) == Side::Black)
            .count();
        if 2 * q == missing.len() {
            RegularityClass::Boundary { q }
        } else {
            RegularityClass::Irregular
        }
    };
    let components = g.connected_components().len();
    ValidationReport {
        bipartite,
        balanced,
        class,
        connected: components <= 1,
        components,
        marked: g.marked_edges().len(),
    }
}
