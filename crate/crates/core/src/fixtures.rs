//! Standard graphs used throughout the toolkit.
//!
//! In every builder black vertices come first (`0..n`) and white vertices
//! follow (`n..2n`), unless stated otherwise.

use crate::graph::{ColoredGraph, Side, VertexId};

fn colors(range: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    range.collect()
}

/// The closed elementary melon: two vertices joined by the colors `0..=d`.
pub fn melon(d: usize) -> ColoredGraph {
    let perms = vec![vec![0]; d + 1];
    ColoredGraph::from_permutations(d, &colors(0..=d), &perms).expect("valid melon")
}

/// The elementary melon bubble: two vertices joined by the colors `1..=d`.
pub fn melon_bubble(d: usize) -> ColoredGraph {
    let perms = vec![vec![0]; d];
    ColoredGraph::from_permutations(d, &colors(1..=d), &perms).expect("valid melon")
}

/// The complete bipartite bubble `K₃,₃`: color `c` joins black `i` to white
/// `i + c mod 3`.
pub fn k33() -> ColoredGraph {
    let perms: Vec<Vec<usize>> = (1..=3)
        .map(|c| (0..3).map(|i| (i + c) % 3).collect())
        .collect();
    ColoredGraph::from_permutations(3, &[1, 2, 3], &perms).expect("valid K33")
}

/// The bipyramid bubble `B_p` (`D = 3`, `4p` vertices): two `2p`-cycles
/// alternating colors 1 and 2 in parallel, joined by color-3 rungs.
///
/// Vertex `k` is the top vertex `t_k`, vertex `2p + k` the bottom `u_k`;
/// `t_k` is black for even `k` and `u_k` for odd `k`.
pub fn bipyramid(p: usize) -> ColoredGraph {
    let m = 2 * p;
    let mut sides = Vec::with_capacity(2 * m);
    for k in 0..m {
        sides.push(if k % 2 == 0 { Side::Black } else { Side::White });
    }
    for k in 0..m {
        sides.push(if k % 2 == 1 { Side::Black } else { Side::White });
    }
    let mut g = ColoredGraph::new(3, sides);
    for k in 0..m {
        let color = if k % 2 == 0 { 1 } else { 2 };
        let next = (k + 1) % m;
        g.add_edge(VertexId(k), VertexId(next), color)
            .expect("top cycle");
        g.add_edge(VertexId(m + k), VertexId(m + next), color)
            .expect("bottom cycle");
        g.add_edge(VertexId(k), VertexId(m + k), 3).expect("rung");
    }
    g
}

/// The octahedron bubble, dual to the cube graph: `B_2`.
pub fn octahedron() -> ColoredGraph {
    bipyramid(2)
}

/// The quartic melonic bubble of color `i`: two pairs joined by every color
/// but `i`, and crossed by color `i`. Blacks `0, 1`, whites `2, 3`.
pub fn quartic_melonic(d: usize, i: usize) -> ColoredGraph {
    let cols = colors(1..=d);
    let perms: Vec<Vec<usize>> = cols
        .iter()
        .map(|&c| if c == i { vec![1, 0] } else { vec![0, 1] })
        .collect();
    ColoredGraph::from_permutations(d, &cols, &perms).expect("valid quartic bubble")
}

/// A cyclic bubble of size `2p`: a cycle alternating the color set `first`
/// and its complement in `1..=d`. Vertex `k` is black iff `k` is even.
pub fn cyclic_bubble(d: usize, first: &[usize], p: usize) -> ColoredGraph {
    let m = 2 * p;
    let sides = (0..m)
        .map(|k| if k % 2 == 0 { Side::Black } else { Side::White })
        .collect();
    let mut g = ColoredGraph::new(d, sides);
    for k in 0..m {
        let next = (k + 1) % m;
        for c in 1..=d {
            if first.contains(&c) == (k % 2 == 0) {
                g.add_edge(VertexId(k), VertexId(next), c)
                    .expect("cyclic edge");
            }
        }
    }
    g
}

/// Black-to-white permutations of the six-color bubble on three pairs,
/// one distinct permutation of three elements per color, color 6 being the
/// identity.
pub const SIX_COLOR_PERMS: [[usize; 3]; 6] = [
    [1, 2, 0],
    [2, 0, 1],
    [1, 0, 2],
    [0, 2, 1],
    [2, 1, 0],
    [0, 1, 2],
];

/// The `D = 6` bubble on six vertices whose colors realize the six
/// permutations of three elements. All its pairings are optimal.
pub fn six_color_bubble() -> ColoredGraph {
    let perms: Vec<Vec<usize>> = SIX_COLOR_PERMS.iter().map(|p| p.to_vec()).collect();
    ColoredGraph::from_permutations(6, &colors(1..=6), &perms).expect("valid bubble")
}

/// The companion of [`six_color_bubble`] with every permutation inverted.
pub fn six_color_conjugate() -> ColoredGraph {
    let perms: Vec<Vec<usize>> = SIX_COLOR_PERMS
        .iter()
        .map(|p| {
            let mut inv = vec![0; 3];
            for (i, &x) in p.iter().enumerate() {
                inv[x] = i;
            }
            inv
        })
        .collect();
    ColoredGraph::from_permutations(6, &colors(1..=6), &perms).expect("valid bubble")
}

/// Toroidal `D = 3` bubbles `K_q` with `2q` vertices and score `q`, for
/// `q` in `3..=5`.
pub fn toroidal(q: usize) -> Option<ColoredGraph> {
    let perms: Vec<Vec<usize>> = match q {
        3 => return Some(k33()),
        4 => vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0], vec![2, 3, 0, 1]],
        5 => vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
        ],
        _ => return None,
    };
    Some(ColoredGraph::from_permutations(3, &[1, 2, 3], &perms).expect("valid bubble"))
}

/// The closed graph obtained by joining the vertex pairs `(black i, white
/// i)` of a `from_permutations`-style graph with color 0.
pub fn with_identity_color0(g: &ColoredGraph) -> ColoredGraph {
    let n = g.vertex_count() / 2;
    let mut h = g.clone();
    for i in 0..n {
        h.add_edge(VertexId(i), VertexId(n + i), 0)
            .expect("free color 0");
    }
    h
}
