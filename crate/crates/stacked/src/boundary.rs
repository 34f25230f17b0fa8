//! Boundary graphs read off stacked maps with marked corners.

use colgraph_core::{zero_score, ColoredGraph, VertexId};
use colgraph_pairings::{covering, Pairing};

use crate::error::StackedError;
use crate::map::StackedMap;

/// Boundary graph of a map with marked corners and the pairing it inherits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapBoundary {
    /// Blacks `0..q`, whites `q..2q`, colors `1..=D`.
    pub graph: ColoredGraph,
    /// Pairs `(k, q + k)`: the two ends of the `k`-th marked edge.
    pub pairing: Pairing,
    /// `Φ₀` of the boundary covered by its pairing.
    pub covering_zero_score: usize,
    /// `Φ₀` with the marked corners.
    pub zero_score: usize,
    /// `Φ₀` once every corner is unmarked.
    pub unmarked_zero_score: usize,
}

impl MapBoundary {
    /// `Φ₀(Γ_q) = Φ₀(Γ_0) − Φ₀(∂^Ω̃)`, equivalently `δ(Γ_q) = δ(Γ_0) + Φ₀(∂^Ω̃)`.
    pub fn degree_relation_holds(&self) -> bool {
        self.zero_score + self.covering_zero_score == self.unmarked_zero_score
    }
}

/// Follows the broken faces of the `(0, i)` submaps between marked corners.
///
/// The `k`-th marked corner `l_k` gives the boundary black vertex
/// `b_{succ_0(l_k)}` and the boundary white vertex `w_{l_k}`.
pub fn boundary_of_map(map: &StackedMap) -> Result<MapBoundary, StackedError> {
    let marks: Vec<usize> = map.marked().iter().copied().collect();
    if marks.is_empty() {
        return Err(StackedError::NoMarks);
    }
    let q = marks.len();
    let n = map.square_count();
    let mut index = vec![usize::MAX; n];
    for (k, &l) in marks.iter().enumerate() {
        index[l] = k;
    }
    let rot = map.zero_rotation();
    let d = map.dimension();
    let mut graph = ColoredGraph::with_halves(d, q);
    for i in 1..=d {
        let succ = map.successor(i);
        for (k, &l) in marks.iter().enumerate() {
            let mut cur = rot[l];
            let end = loop {
                let a = succ[cur];
                if index[a] != usize::MAX {
                    break index[a];
                }
                cur = rot[a];
            };
            graph.add_edge(VertexId(k), VertexId(q + end), i)?;
        }
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..q).map(|k| (VertexId(k), VertexId(q + k))).collect();
    let pairing = Pairing::new(&graph, &pairs)?;
    let covering_zero_score = zero_score(&covering(&graph, &pairing)?);
    Ok(MapBoundary {
        graph,
        pairing,
        covering_zero_score,
        zero_score: map.zero_score(),
        unmarked_zero_score: map.unmarked().zero_score(),
    })
}
