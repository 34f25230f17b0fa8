//! Jackets: the regular embeddings of a colored graph.
//!
//! For a cyclic order `μ` of the colors, the jacket is the map whose
//! rotation is `μ` at black vertices and `μ⁻¹` at white vertices. Its faces
//! are the bicolored cycles of consecutive colors of `μ`.

use itertools::Itertools;

use crate::error::GraphError;
use crate::graph::ColoredGraph;
use crate::map::CombinatorialMap;

/// One jacket with its genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jacket {
    /// The cyclic color order, starting at the smallest color.
    pub order: Vec<usize>,
    pub map: CombinatorialMap,
    pub genus: usize,
}

/// Cyclic orders of `colors` up to rotation and reversal.
pub fn cyclic_orders(colors: &[usize]) -> Vec<Vec<usize>> {
    let Some((&first, rest)) = colors.split_first() else {
        return Vec::new();
    };
    rest.iter()
        .copied()
        .permutations(rest.len())
        .filter(|p| p.len() < 2 || p[0] < p[p.len() - 1])
        .map(|p| std::iter::once(first).chain(p).collect())
        .collect()
}

/// The embedded map of the jacket with cyclic order `order`.
pub fn jacket_map(g: &ColoredGraph, order: &[usize]) -> CombinatorialMap {
    let c = order.len();
    let mut pos = vec![usize::MAX; g.dimension() + 1];
    for (k, &col) in order.iter().enumerate() {
        pos[col] = k;
    }
    let n = g.vertex_count() * c;
    let mut sigma = vec![0; n];
    let mut alpha = vec![0; n];
    for v in g.vertices() {
        let black = g.side(v) == crate::graph::Side::Black;
        for k in 0..c {
            let dart = v.0 * c + k;
            let next = if black { (k + 1) % c } else { (k + c - 1) % c };
            sigma[dart] = v.0 * c + next;
            let u = g.neighbor(v, order[k]).expect("regular graph");
            alpha[dart] = u.0 * c + pos[order[k]];
        }
    }
    CombinatorialMap::new(sigma, alpha).expect("jacket darts are consistent")
}

/// All jackets of a connected regular graph.
pub fn jackets(g: &ColoredGraph) -> Result<Vec<Jacket>, GraphError> {
    let colors = g.color_range();
    g.require_regular(&colors)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(cyclic_orders(&colors)
        .into_iter()
        .map(|order| {
            let map = jacket_map(g, &order);
            let genus = map.genus();
            Jacket { order, map, genus }
        })
        .collect())
}
