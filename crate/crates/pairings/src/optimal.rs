//! Optimal pairings: exhaustive search with forced large pairs.

use colgraph_core::ColoredGraph;
use itertools::Itertools;

use crate::error::PairingError;
use crate::pairing::{from_positions, Layout, Pairing};

/// Default bound on the number of pairs for exhaustive searches.
pub const DEFAULT_CAP: usize = 10;

/// Outcome of [`optimal_pairings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalPairings {
    /// Maximal 0-score of a covering.
    pub zero_score: usize,
    /// All maximizing pairings in lexicographic order. The first one is the
    /// default choice for downstream bijections.
    pub pairings: Vec<Pairing>,
    /// Pairs fixed before the search (`h`-pairs with `h > D/2`).
    pub forced: usize,
}

impl OptimalPairings {
    /// The lexicographically least optimal pairing.
    pub fn chosen(&self) -> &Pairing {
        &self.pairings[0]
    }
}

/// Forced pairs as `(black position, white position)`: pairs joined by more
/// than `D/2` edges, which belong to every optimal pairing.
pub fn forced_pairs(layout: &Layout, d: usize) -> Vec<(usize, usize)> {
    let n = layout.n();
    (0..n)
        .filter_map(|k| {
            (0..n)
                .find(|&w| 2 * layout.multiplicity(k, w) > d)
                .map(|w| (k, w))
        })
        .collect()
}

/// All pairings of `b` maximizing the 0-score of the covering.
pub fn optimal_pairings(b: &ColoredGraph, cap: usize) -> Result<OptimalPairings, PairingError> {
    let layout = Layout::new(b)?;
    let n = layout.n();
    if n > cap {
        return Err(PairingError::CapExceeded { pairs: n, cap });
    }
    let forced = forced_pairs(&layout, b.dimension());
    let mut omega = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(k, w) in &forced {
        omega[k] = w;
        used[w] = true;
    }
    let free_blacks: Vec<usize> = (0..n).filter(|&k| omega[k] == usize::MAX).collect();
    let free_whites: Vec<usize> = (0..n).filter(|&w| !used[w]).collect();
    let mut best = 0;
    let mut found: Vec<Vec<usize>> = Vec::new();
    for perm in free_whites.iter().copied().permutations(free_whites.len()) {
        for (&k, &w) in free_blacks.iter().zip(&perm) {
            omega[k] = w;
        }
        let score = layout.zero_score(&omega);
        if score > best || found.is_empty() {
            best = score;
            found.clear();
        }
        if score == best {
            found.push(omega.clone());
        }
    }
    found.sort();
    let pairings = found
        .iter()
        .map(|o| from_positions(&layout.blacks, &layout.whites, o))
        .collect();
    Ok(OptimalPairings {
        zero_score: best,
        pairings,
        forced: forced.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use colgraph_core::fixtures::{k33, melon_bubble, octahedron, quartic_melonic};

    #[test]
    fn k33_has_three_optimal_pairings() {
        let opt = optimal_pairings(&k33(), DEFAULT_CAP).unwrap();
        assert_eq!(opt.zero_score, 6);
        assert_eq!(opt.pairings.len(), 3);
        assert_eq!(opt.forced, 0);
    }

    #[test]
    fn melonic_pairs_are_forced() {
        let opt = optimal_pairings(&quartic_melonic(3, 1), DEFAULT_CAP).unwrap();
        assert_eq!(opt.forced, 2);
        assert_eq!(opt.pairings.len(), 1);
        assert_eq!(
            optimal_pairings(&melon_bubble(4), DEFAULT_CAP)
                .unwrap()
                .zero_score,
            4
        );
    }

    #[test]
    fn octahedron_optimum() {
        let opt = optimal_pairings(&octahedron(), DEFAULT_CAP).unwrap();
        assert_eq!((opt.zero_score, opt.pairings.len()), (8, 3));
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            optimal_pairings(&octahedron(), 3),
            Err(PairingError::CapExceeded { pairs: 4, cap: 3 })
        );
    }
}
