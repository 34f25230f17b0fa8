//! Simplex counts of the dual triangulation.

use itertools::Itertools;

use crate::error::GraphError;
use crate::graph::ColoredGraph;
use crate::score::pair_counts;

/// `counts[k]` is the number of `k`-simplices of the dual triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexCensus {
    pub counts: Vec<usize>,
}

impl SimplexCensus {
    /// `Σ (-1)^k n_k`.
    pub fn euler_sum(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }
}

/// `n_k` is the number of components spanned by each set of `D - k` colors,
/// summed over the sets. Requires a closed graph.
pub fn simplex_census(g: &ColoredGraph) -> Result<SimplexCensus, GraphError> {
    let d = g.dimension();
    let colors: Vec<usize> = (0..=d).collect();
    g.require_regular(&colors)?;
    let counts = (0..=d)
        .map(|k| {
            colors
                .iter()
                .copied()
                .combinations(d - k)
                .map(|subset| g.count_components_with_colors(&subset))
                .sum()
        })
        .collect();
    Ok(SimplexCensus { counts })
}

/// Exact manifold test in dimension 3: the Euler sum vanishes and every
/// three-color residue is a sphere.
pub fn euler_check_3d(g: &ColoredGraph) -> Result<bool, GraphError> {
    if g.dimension() != 3 {
        return Err(GraphError::WrongDimension {
            expected: 3,
            found: g.dimension(),
        });
    }
    let census = simplex_census(g)?;
    if census.euler_sum() != 0 {
        return Ok(false);
    }
    for subset in (0..=3usize).combinations(3) {
        for comp in g.components_with_colors(&subset) {
            let h = g.induced_subgraph(&comp);
            let residue = h.without_color(missing(&subset));
            let phi: usize = pair_counts(&residue).values().sum();
            let v = residue.vertex_count() as i64;
            let e = residue.edge_count() as i64;
            if phi as i64 - e + v != 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn missing(subset: &[usize]) -> usize {
    (0..=3)
        .find(|c| !subset.contains(c))
        .expect("one color is missing")
}
