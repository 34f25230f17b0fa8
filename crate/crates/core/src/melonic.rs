//! Melonic detection by repeated contraction of maximal parallel pairs.
//!
//! With `c` colors at every vertex, two vertices joined by `c - 1` parallel
//! edges form a pair whose contraction keeps the Gurau degree. A connected
//! graph is melonic iff such contractions reach the two-vertex melon.

use crate::graph::{ColoredGraph, VertexId};

/// One contraction: the removed pair and the color of the edge that was
/// reconnected around it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contraction {
    pub black: VertexId,
    pub white: VertexId,
    pub color: usize,
}

/// Outcome of the melonic test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MelonicWitness {
    pub melonic: bool,
    /// Contractions performed, in order.
    pub contractions: Vec<Contraction>,
    /// The canonical pairing `(black, white)` when melonic.
    pub canonical_pairing: Option<Vec<(VertexId, VertexId)>>,
}

/// Runs the contraction procedure on a connected graph that is regular in
/// its colors. Disconnected or irregular input is reported non-melonic.
pub fn is_melonic(g: &ColoredGraph) -> MelonicWitness {
    let colors = g.color_range();
    let fail = |contractions| MelonicWitness {
        melonic: false,
        contractions,
        canonical_pairing: None,
    };
    if g.vertex_count() < 2 || g.require_regular(&colors).is_err() || !g.is_connected() {
        return fail(Vec::new());
    }
    let n = g.vertex_count();
    let d = g.dimension();
    // adj[v][c] = neighbor along color c
    let mut adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..=d)
                .map(|c| g.neighbor(VertexId(v), c).map_or(usize::MAX, |u| u.0))
                .collect()
        })
        .collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut contractions = Vec::new();
    let mut pairs = Vec::new();
    while remaining > 2 {
        let mut found = None;
        'search: for b in g.blacks().map(|v| v.0).filter(|&b| alive[b]) {
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &c in &colors {
                let w = adj[b][c];
                match counts.iter_mut().find(|(u, _)| *u == w) {
                    Some(entry) => entry.1 += 1,
                    None => counts.push((w, 1)),
                }
            }
            for &(w, k) in &counts {
                if k == colors.len() - 1 {
                    let odd = *colors
                        .iter()
                        .find(|&&c| adj[b][c] != w)
                        .expect("one color differs");
                    found = Some((b, w, odd));
                    break 'search;
                }
            }
        }
        let Some((b, w, odd)) = found else {
            return fail(contractions);
        };
        let w2 = adj[b][odd];
        let b2 = adj[w][odd];
        adj[b2][odd] = w2;
        adj[w2][odd] = b2;
        alive[b] = false;
        alive[w] = false;
        remaining -= 2;
        contractions.push(Contraction {
            black: VertexId(b),
            white: VertexId(w),
            color: odd,
        });
        pairs.push((VertexId(b), VertexId(w)));
    }
    let last: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let (b, w) = if g.side(VertexId(last[0])) == crate::graph::Side::Black {
        (last[0], last[1])
    } else {
        (last[1], last[0])
    };
    if colors.iter().any(|&c| adj[b][c] != w) {
        return fail(contractions);
    }
    pairs.push((VertexId(b), VertexId(w)));
    pairs.sort();
    MelonicWitness {
        melonic: true,
        contractions,
        canonical_pairing: Some(pairs),
    }
}
