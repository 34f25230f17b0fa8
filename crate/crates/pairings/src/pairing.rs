//! Pairings of bubbles and the coverings they induce.

use colgraph_core::{ColoredGraph, Side, VertexId};
use itertools::Itertools;

use crate::error::PairingError;

/// A perfect matching of black and white vertices, sorted by black vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pairing {
    pairs: Vec<(VertexId, VertexId)>,
}

impl Pairing {
    /// Checks that `pairs` matches every vertex of `g` exactly once with a
    /// vertex of the other side. Pairs may be given with either endpoint
    /// first.
    pub fn new(g: &ColoredGraph, pairs: &[(VertexId, VertexId)]) -> Result<Self, PairingError> {
        let mut seen = vec![false; g.vertex_count()];
        let mut sorted = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for x in [u, v] {
                if x.0 >= g.vertex_count() {
                    return Err(PairingError::Mismatched(format!("unknown vertex {}", x.0)));
                }
                if std::mem::replace(&mut seen[x.0], true) {
                    return Err(PairingError::Mismatched(format!(
                        "vertex {} paired twice",
                        x.0
                    )));
                }
            }
            let (b, w) = match (g.side(u), g.side(v)) {
                (Side::Black, Side::White) => (u, v),
                (Side::White, Side::Black) => (v, u),
                _ => {
                    return Err(PairingError::Mismatched(format!(
                        "pair {}-{} is monochromatic",
                        u.0, v.0
                    )))
                }
            };
            sorted.push((b, w));
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PairingError::Mismatched(format!("vertex {v} is unpaired")));
        }
        sorted.sort();
        Ok(Pairing { pairs: sorted })
    }

    /// Pairs as `(black, white)`, sorted by black vertex.
    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    /// True for the pairing of the empty graph.
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Index of the pair containing each vertex.
    pub fn pair_index(&self, vertex_count: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; vertex_count];
        for (k, &(b, w)) in self.pairs.iter().enumerate() {
            idx[b.0] = k;
            idx[w.0] = k;
        }
        idx
    }

    /// Partner of every vertex.
    pub fn partners(&self, vertex_count: usize) -> Vec<VertexId> {
        let mut p = vec![VertexId(usize::MAX); vertex_count];
        for &(b, w) in &self.pairs {
            p[b.0] = w;
            p[w.0] = b;
        }
        p
    }
}

/// Checks that `b` carries no color 0 and every vertex has the colors
/// `1..=D`.
pub fn require_bubble(b: &ColoredGraph) -> Result<(), PairingError> {
    if b.edges().iter().any(|e| e.color == 0) {
        return Err(PairingError::NotBubble("color-0 edges present".into()));
    }
    let colors: Vec<usize> = (1..=b.dimension()).collect();
    b.require_regular(&colors)
        .map_err(|e| PairingError::NotBubble(e.to_string()))?;
    let (blacks, whites) = b.split_sides();
    if blacks.len() != whites.len() {
        return Err(PairingError::NotBubble("unbalanced sides".into()));
    }
    Ok(())
}

/// The pairing built from a permutation `omega` of white positions: black
/// `blacks[k]` is paired with `whites[omega[k]]`.
pub(crate) fn from_positions(blacks: &[VertexId], whites: &[VertexId], omega: &[usize]) -> Pairing {
    let pairs = blacks
        .iter()
        .zip(omega)
        .map(|(&b, &w)| (b, whites[w]))
        .collect();
    Pairing { pairs }
}

/// All `(V/2)!` pairings of a bubble, in lexicographic order of the white
/// partners of the blacks taken in increasing order.
pub fn enumerate_pairings(b: &ColoredGraph) -> Result<impl Iterator<Item = Pairing>, PairingError> {
    require_bubble(b)?;
    let (blacks, whites) = b.split_sides();
    let n = blacks.len();
    Ok((0..n)
        .permutations(n)
        .map(move |omega| from_positions(&blacks, &whites, &omega)))
}

/// The pairing whose pairs are the endpoints of the color-`c` edges.
pub fn pairing_from_color(g: &ColoredGraph, c: usize) -> Result<Pairing, PairingError> {
    let pairs: Vec<(VertexId, VertexId)> = g
        .edges()
        .iter()
        .filter(|e| e.color == c)
        .map(|e| (e.black, e.white))
        .collect();
    Pairing::new(g, &pairs)
}

/// The closed graph `b^Ω`: `b` with a color-0 edge added on every pair.
/// Vertex indices are preserved and the new edges are appended in pair
/// order.
pub fn covering(b: &ColoredGraph, omega: &Pairing) -> Result<ColoredGraph, PairingError> {
    if omega
        .pairs
        .iter()
        .any(|&(x, y)| x.0 >= b.vertex_count() || y.0 >= b.vertex_count())
        || 2 * omega.len() != b.vertex_count()
    {
        return Err(PairingError::Mismatched(
            "pairing size differs from the bubble".into(),
        ));
    }
    let mut g = b.clone();
    for &(x, y) in &omega.pairs {
        g.add_edge(x, y, 0)?;
    }
    Ok(g)
}

/// Per-color black-to-white permutations of a bubble in positional form,
/// used by the fast score evaluators.
#[derive(Debug, Clone)]
pub struct Layout {
    pub blacks: Vec<VertexId>,
    pub whites: Vec<VertexId>,
    /// `perms[c - 1][k]` is the white position joined to black `k` by color
    /// `c`.
    pub perms: Vec<Vec<usize>>,
}

impl Layout {
    /// Layout of a bubble with colors `1..=D`.
    pub fn new(b: &ColoredGraph) -> Result<Self, PairingError> {
        require_bubble(b)?;
        let (blacks, whites) = b.split_sides();
        let maps = b.color_maps();
        let perms = (1..=b.dimension())
            .map(|c| maps[c].iter().map(|w| w.expect("regular bubble")).collect())
            .collect();
        Ok(Layout {
            blacks,
            whites,
            perms,
        })
    }

    /// Number of pairs.
    pub fn n(&self) -> usize {
        self.blacks.len()
    }

    /// Positional form of a pairing: `omega[k]` is the white position paired
    /// with black `k`.
    pub fn positions(&self, omega: &Pairing, vertex_count: usize) -> Vec<usize> {
        let mut wpos = vec![usize::MAX; vertex_count];
        for (i, w) in self.whites.iter().enumerate() {
            wpos[w.0] = i;
        }
        let mut bpos = vec![usize::MAX; vertex_count];
        for (i, b) in self.blacks.iter().enumerate() {
            bpos[b.0] = i;
        }
        let mut out = vec![0; self.n()];
        for &(b, w) in omega.pairs() {
            out[bpos[b.0]] = wpos[w.0];
        }
        out
    }

    /// Per-color successor permutations on pairs: `succ[c - 1][k]` is the pair
    /// containing the white joined to black `k` by color `c`.
    pub fn successors(&self, omega: &[usize]) -> Vec<Vec<usize>> {
        let mut inv = vec![0; omega.len()];
        for (k, &w) in omega.iter().enumerate() {
            inv[w] = k;
        }
        self.perms
            .iter()
            .map(|p| p.iter().map(|&w| inv[w]).collect())
            .collect()
    }

    /// `Φ₀` of the covering given by `omega`, without building it.
    pub fn zero_score(&self, omega: &[usize]) -> usize {
        self.successors(omega)
            .iter()
            .map(|s| colgraph_core::map::cycle_count(s))
            .sum()
    }

    /// Multiplicity of the edges between black `k` and white position `w`.
    pub fn multiplicity(&self, k: usize, w: usize) -> usize {
        self.perms.iter().filter(|p| p[k] == w).count()
    }
}
