//! The simplified bijection: each bubble collapses to one white vertex and
//! edges carry color sets.

use std::collections::BTreeSet;

use colgraph_core::CombinatorialMap;

use crate::error::StackedError;
use crate::map::StackedMap;

/// A collapsed bubble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedVertex {
    /// Squares of the bubble, i.e. the incident edges, in increasing order.
    pub squares: Vec<usize>,
    /// Cyclic order of the incident edges, as a successor list over
    /// `squares`; `None` when every color cycle has length at most two and
    /// the vertex is not embedded.
    pub rotation: Option<Vec<usize>>,
}

/// A bipartite map with color-set edges between collapsed bubbles and
/// color-0 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplifiedMap {
    base: StackedMap,
    pub vertices: Vec<SimplifiedVertex>,
    /// Color set of each edge (square).
    pub color_sets: Vec<BTreeSet<usize>>,
}

/// Whether the cyclic order `sub` (successor list restricted to its support)
/// is the restriction of the cyclic sequence `order`.
fn is_restriction(order: &[usize], sub: &[usize], succ: &[usize]) -> bool {
    let support: BTreeSet<usize> = sub.iter().copied().collect();
    let filtered: Vec<usize> = order
        .iter()
        .copied()
        .filter(|x| support.contains(x))
        .collect();
    filtered.len() == support.len()
        && (0..filtered.len()).all(|k| succ[filtered[k]] == filtered[(k + 1) % filtered.len()])
}

/// Collapses every bubble of `map` when each bubble has at most one
/// non-leaf star per color and its long stars share one cyclic order.
pub fn simplified_map(map: &StackedMap) -> Result<SimplifiedMap, StackedError> {
    let n = map.square_count();
    let d = map.dimension();
    let (bubble, count) = map.bubble_labels();
    let mut squares = vec![Vec::new(); count];
    for l in 0..n {
        squares[bubble[l]].push(l);
    }
    let mut color_sets = vec![BTreeSet::new(); n];
    let mut vertices = Vec::with_capacity(count);
    for (b, sq) in squares.iter().enumerate() {
        let mut long: Vec<(usize, Vec<usize>)> = Vec::new();
        for c in 1..=d {
            let stars: Vec<Vec<usize>> = map
                .stars(c)
                .into_iter()
                .filter(|s| bubble[s[0]] == b && s.len() > 1)
                .collect();
            if stars.len() > 1 {
                return Err(StackedError::NotSimplifiable(format!(
                    "bubble {b} has {} non-leaf stars of color {c}",
                    stars.len()
                )));
            }
            if let Some(star) = stars.into_iter().next() {
                for &l in &star {
                    color_sets[l].insert(c);
                }
                if star.len() > 2 {
                    long.push((c, star));
                }
            }
        }
        let rotation = match long.iter().max_by_key(|(_, s)| s.len()) {
            None => None,
            Some((_, order)) => {
                if order.len() != sq.len() {
                    return Err(StackedError::NotSimplifiable(format!(
                        "bubble {b} has no star through all its squares"
                    )));
                }
                for (c, star) in &long {
                    if !is_restriction(order, star, map.successor(*c)) {
                        return Err(StackedError::NotSimplifiable(format!(
                            "bubble {b}: color {c} disagrees with the cyclic order"
                        )));
                    }
                }
                let mut next = vec![0; sq.len()];
                for (k, &l) in order.iter().enumerate() {
                    let pos = sq.binary_search(&l).expect("square of the bubble");
                    next[pos] = order[(k + 1) % order.len()];
                }
                Some(next)
            }
        };
        vertices.push(SimplifiedVertex {
            squares: sq.clone(),
            rotation,
        });
    }
    Ok(SimplifiedMap {
        base: map.clone(),
        vertices,
        color_sets,
    })
}

impl SimplifiedMap {
    /// Circuit rank: edges minus vertices plus components.
    pub fn circuit_rank(&self) -> usize {
        self.base.projected_rank()
    }

    /// Vertex degree of each collapsed bubble.
    pub fn valencies(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.squares.len()).collect()
    }

    /// The color-`i` submap: edges whose color set contains `i`, color-0
    /// vertices rotated as in the stacked map, and the bubble vertices
    /// rotated along their color-`i` star.
    pub fn color_submap(&self, i: usize) -> CombinatorialMap {
        let n = self.base.square_count();
        let rot = self.base.zero_rotation();
        let succ = self.base.successor(i);
        let kept: Vec<usize> = (0..n)
            .filter(|&l| self.color_sets[l].contains(&i))
            .collect();
        let mut index = vec![usize::MAX; n];
        for (k, &l) in kept.iter().enumerate() {
            index[l] = k;
        }
        let m = kept.len();
        let mut sigma = vec![0; 2 * m];
        let mut alpha = vec![0; 2 * m];
        for (k, &l) in kept.iter().enumerate() {
            alpha[2 * k] = 2 * k + 1;
            alpha[2 * k + 1] = 2 * k;
            let mut x = rot[l];
            while index[x] == usize::MAX {
                x = rot[x];
            }
            sigma[2 * k] = 2 * index[x];
            sigma[2 * k + 1] = 2 * index[succ[l]] + 1;
        }
        // marked corners move back to the preceding kept square
        let mut marked = Vec::new();
        let mut isolated = 0;
        let mut isolated_marked = 0;
        for star in self.base.stars(0) {
            let has_kept = star.iter().any(|&l| index[l] != usize::MAX);
            let star_marked = star.iter().any(|l| self.base.marked().contains(l));
            if !has_kept {
                isolated += 1;
                isolated_marked += usize::from(star_marked);
                continue;
            }
            for &l in star.iter().filter(|l| self.base.marked().contains(l)) {
                let mut x = l;
                while index[x] == usize::MAX {
                    x = star[(star.iter().position(|&y| y == x).expect("on star") + star.len()
                        - 1)
                        % star.len()];
                }
                marked.push(2 * index[x]);
            }
        }
        debug_assert!(isolated_marked <= isolated);
        CombinatorialMap::new(sigma, alpha)
            .expect("valid map")
            .with_isolated_vertices(isolated)
            .with_marked_corners(marked)
            .expect("valid corners")
    }

    /// Faces and interior faces of the color-`i` submap.
    pub fn color_faces(&self, i: usize) -> (usize, usize) {
        let sub = self.color_submap(i);
        let isolated_marked = self
            .base
            .stars(0)
            .iter()
            .filter(|s| {
                s.iter().all(|l| !self.color_sets[*l].contains(&i))
                    && s.iter().any(|l| self.base.marked().contains(l))
            })
            .count();
        (
            sub.face_count(),
            sub.interior_face_count() - isolated_marked,
        )
    }
}
