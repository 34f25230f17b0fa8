//! Random graph generators for property tests and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{ColoredGraph, VertexId};

fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// A uniformly random labeled graph on `n` black and `n` white vertices
/// carrying the given colors, possibly disconnected.
pub fn random_graph<R: Rng>(d: usize, colors: &[usize], n: usize, rng: &mut R) -> ColoredGraph {
    let perms: Vec<Vec<usize>> = colors.iter().map(|_| random_perm(n, rng)).collect();
    ColoredGraph::from_permutations(d, colors, &perms).expect("permutations give proper graphs")
}

/// A random connected closed graph with colors `0..=d` and `2n` vertices.
pub fn random_closed<R: Rng>(d: usize, n: usize, rng: &mut R) -> ColoredGraph {
    let colors: Vec<usize> = (0..=d).collect();
    loop {
        let g = random_graph(d, &colors, n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected bubble with colors `1..=d` and `2n` vertices.
pub fn random_bubble<R: Rng>(d: usize, n: usize, rng: &mut R) -> ColoredGraph {
    let colors: Vec<usize> = (1..=d).collect();
    loop {
        let g = random_graph(d, &colors, n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random melonic graph on the colors of `colors`, grown from the
/// two-vertex melon by `insertions` random insertions of a parallel pair on
/// an edge.
pub fn random_melonic<R: Rng>(
    d: usize,
    colors: &[usize],
    insertions: usize,
    rng: &mut R,
) -> ColoredGraph {
    // perms[k][b] = white of black b in color colors[k]
    let mut perms: Vec<Vec<usize>> = colors.iter().map(|_| vec![0]).collect();
    for _ in 0..insertions {
        let n = perms[0].len();
        let k = rng.gen_range(0..colors.len());
        let b = rng.gen_range(0..n);
        let w = perms[k][b];
        // new black n and white n, joined by every color but colors[k]
        for (j, p) in perms.iter_mut().enumerate() {
            if j == k {
                p[b] = n;
                p.push(w);
            } else {
                p.push(n);
            }
        }
    }
    let g = ColoredGraph::from_permutations(d, colors, &perms).expect("insertions keep properness");
    let n = perms[0].len();
    // shuffle within each side so the halves layout is preserved
    let mut blacks: Vec<usize> = (0..n).collect();
    let mut whites: Vec<usize> = (0..n).collect();
    blacks.shuffle(rng);
    whites.shuffle(rng);
    let perm: Vec<usize> = blacks
        .into_iter()
        .chain(whites.into_iter().map(|w| n + w))
        .collect();
    g.permute_vertices(&perm)
}

/// A random vertex of the given graph.
pub fn random_vertex<R: Rng>(g: &ColoredGraph, rng: &mut R) -> VertexId {
    VertexId(rng.gen_range(0..g.vertex_count()))
}
