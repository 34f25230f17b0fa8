//! Bicolored cycles, scores and the Gurau degree.
//!
//! Marked edges are treated as absent: open bicolored paths ending on a
//! missing or marked color-0 edge are never counted.

use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::error::GraphError;
use crate::graph::{ColoredGraph, VertexId};
use crate::jacket::{jackets, Jacket};

/// The bicolored cycles of one color pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicoloredCycles {
    pub count: usize,
    /// Vertex sequences, each starting at its smallest vertex.
    pub cycles: Vec<Vec<VertexId>>,
}

/// Scores, degree and jacket genera of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub score: usize,
    pub zero_score: usize,
    pub pair_counts: BTreeMap<(usize, usize), usize>,
    pub gurau_degree: Rational64,
    /// Cyclic color orders with the genus of the corresponding jacket.
    pub jacket_genera: Vec<(Vec<usize>, usize)>,
}

fn check_color(g: &ColoredGraph, c: usize) -> Result<(), GraphError> {
    if c > g.dimension() {
        Err(GraphError::ColorOutOfRange {
            color: c,
            max: g.dimension(),
        })
    } else {
        Ok(())
    }
}

/// The cycles alternating colors `i` and `j`.
pub fn bicolored_cycles(
    g: &ColoredGraph,
    i: usize,
    j: usize,
) -> Result<BicoloredCycles, GraphError> {
    check_color(g, i)?;
    check_color(g, j)?;
    if i == j {
        return Err(GraphError::SameColor(i));
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut cycles = Vec::new();
    for start in g.vertices() {
        if seen[start.0] {
            continue;
        }
        let mut walk = vec![start];
        seen[start.0] = true;
        let mut v = start;
        let mut color = i;
        let mut closed = false;
        while let Some(u) = g.live_neighbor(v, color) {
            color = if color == i { j } else { i };
            if u == start {
                closed = color == i;
                break;
            }
            if seen[u.0] {
                break;
            }
            seen[u.0] = true;
            walk.push(u);
            v = u;
        }
        if !closed {
            // mark the rest of an open path so it is not restarted midway
            let mut v = start;
            let mut color = j;
            while let Some(u) = g.live_neighbor(v, color) {
                if seen[u.0] {
                    break;
                }
                seen[u.0] = true;
                color = if color == i { j } else { i };
                v = u;
            }
            continue;
        }
        cycles.push(walk);
    }
    Ok(BicoloredCycles {
        count: cycles.len(),
        cycles,
    })
}

/// `Φ_{i,j}` for every pair of colors present, keyed by `(i, j)` with `i < j`.
pub fn pair_counts(g: &ColoredGraph) -> BTreeMap<(usize, usize), usize> {
    let colors = g.colors_present();
    let mut out = BTreeMap::new();
    for (a, &i) in colors.iter().enumerate() {
        for &j in &colors[a + 1..] {
            let count = bicolored_cycles(g, i, j).expect("colors in range").count;
            out.insert((i, j), count);
        }
    }
    out
}

/// The score `Φ`: total number of bicolored cycles.
pub fn score(g: &ColoredGraph) -> usize {
    pair_counts(g).values().sum()
}

/// The 0-score `Φ₀`: bicolored cycles through color 0.
pub fn zero_score(g: &ColoredGraph) -> usize {
    (1..=g.dimension())
        .map(|i| bicolored_cycles(g, 0, i).expect("colors in range").count)
        .sum()
}

/// `Φ` minus the cycles of the excluded color pairs.
pub fn weighted_score(g: &ColoredGraph, excluded: &[(usize, usize)]) -> Result<usize, GraphError> {
    let mut total = score(g);
    let mut seen = Vec::new();
    for &(i, j) in excluded {
        let key = (i.min(j), i.max(j));
        if seen.contains(&key) {
            continue;
        }
        seen.push(key);
        total -= bicolored_cycles(g, i, j)?.count;
    }
    Ok(total)
}

/// Gurau degree `d + d(d-1)/4·V - Φ`, with `d + 1` the number of colors
/// carried by every vertex.
pub fn gurau_degree(g: &ColoredGraph) -> Result<Rational64, GraphError> {
    let colors = g.color_range();
    g.require_regular(&colors)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let d = colors.len() as i64 - 1;
    let v = g.vertex_count() as i64;
    let phi = score(g) as i64;
    Ok(
        Rational64::from_integer(d) + Rational64::new(d * (d - 1) * v, 4)
            - Rational64::from_integer(phi),
    )
}

/// The jacket formula `2/(c-2)!·Σ genus` for a graph with `c` colors.
pub fn degree_from_jackets(list: &[Jacket], colors: usize) -> Rational64 {
    let total: usize = list.iter().map(|j| j.genus).sum();
    let fact: i64 = (1..=(colors as i64 - 2).max(0)).product::<i64>().max(1);
    Rational64::new(2 * total as i64, fact)
}

/// Full report: scores, pair counts, degree and jacket genera.
pub fn degree_report(g: &ColoredGraph) -> Result<DegreeReport, GraphError> {
    let gurau = gurau_degree(g)?;
    let js = jackets(g)?;
    Ok(DegreeReport {
        score: score(g),
        zero_score: zero_score(g),
        pair_counts: pair_counts(g),
        gurau_degree: gurau,
        jacket_genera: js.into_iter().map(|j| (j.order, j.genus)).collect(),
    })
}
