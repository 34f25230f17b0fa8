//! Weighted scores of the four-vertex gluings modelling cubes.

use colgraph_core::{weighted_score, ColoredGraph, VertexId};

use crate::error::EnumError;

/// Opposite facets of the cube, excluded from the weighted score.
pub const CUBE_EXCLUDED: [(usize, usize); 3] = [(1, 6), (2, 4), (3, 5)];

/// One four-vertex gluing in dimension 6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeGluing {
    pub name: &'static str,
    /// Colors joining black `k` to white `k`; the rest cross over.
    pub side: Vec<usize>,
    pub graph: ColoredGraph,
    pub score: usize,
}

/// The four-vertex graph on colors `1..=6` whose colors in `side` join
/// black `k` to white `k` and whose other colors join black `k` to white
/// `1 − k`.
pub fn four_vertex_graph(side: &[usize]) -> Result<ColoredGraph, EnumError> {
    let mut g = ColoredGraph::with_halves(6, 2);
    for c in 1..=6 {
        let straight = side.contains(&c);
        for k in 0..2 {
            let w = if straight { k } else { 1 - k };
            g.add_edge(VertexId(k), VertexId(2 + w), c)?;
        }
    }
    Ok(g)
}

/// `Φ − Φ₁₆ − Φ₂₄ − Φ₃₅` of the gluings `4,1`, `4,2a`, `4,2b`, `4,3a` and
/// `4,3b`.
pub fn four_cube_gluings() -> Result<Vec<CubeGluing>, EnumError> {
    let cases: [(&str, &[usize]); 5] = [
        ("4,1", &[1]),
        ("4,2a", &[1, 2]),
        ("4,2b", &[1, 6]),
        ("4,3a", &[1, 2, 3]),
        ("4,3b", &[1, 2, 6]),
    ];
    cases
        .into_iter()
        .map(|(name, side)| {
            let graph = four_vertex_graph(side)?;
            let score = weighted_score(&graph, &CUBE_EXCLUDED)?;
            Ok(CubeGluing {
                name,
                side: side.to_vec(),
                graph,
                score,
            })
        })
        .collect()
}

/// Every weighted score reachable by a four-vertex gluing, over all sides.
pub fn reachable_scores() -> Result<Vec<usize>, EnumError> {
    let mut out = Vec::new();
    for mask in 0u32..64 {
        let side: Vec<usize> = (1..=6).filter(|c| mask & (1 << (c - 1)) != 0).collect();
        out.push(weighted_score(&four_vertex_graph(&side)?, &CUBE_EXCLUDED)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
