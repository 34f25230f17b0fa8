//! Gluings of quartic melonic bubbles as edge-colored combinatorial maps.
//!
//! Darts are squares, the rotation is the color-0 rotation, the involution
//! pairs the two squares of a bubble and each edge carries the crossing
//! color of its bubble. `Γ⁽ⁱ⁾` keeps the color-`i` edges and every vertex.

use std::collections::BTreeSet;

use colgraph_core::map::{compose, cycle_count, inverse};
use colgraph_core::{ColoredGraph, VertexId};
use colgraph_pairings::{lm, Pairing};
use itertools::Itertools;

use crate::boundary::boundary_of_map;
use crate::error::StackedError;
use crate::map::{orbit_labels, psi0, union_components, StackedMap};

/// An edge-colored map: darts `2k` and `2k + 1` form edge `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuarticMap {
    d: usize,
    sigma: Vec<usize>,
    colors: Vec<usize>,
    marked: BTreeSet<usize>,
}

/// First orders of the degree expansion, read from cycle data only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderLabel {
    /// No cycle at all.
    Tree,
    /// One monochromatic cycle and no polychromatic one.
    MonochromaticCycle,
    /// The third order: one polychromatic cycle (`D ≥ 4`) and, for
    /// `D ≤ 4`, two monochromatic cycles on planar submaps.
    NextOrder,
    /// Anything else.
    Higher,
}

impl OrderLabel {
    /// Degree of the order, `None` for [`OrderLabel::Higher`].
    pub fn degree(self, d: usize) -> Option<usize> {
        match self {
            OrderLabel::Tree => Some(0),
            OrderLabel::MonochromaticCycle => Some(d - 2),
            OrderLabel::NextOrder => Some(if d >= 4 { d } else { 2 }),
            OrderLabel::Higher => None,
        }
    }
}

/// Degree data of a quartic map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticDecomposition {
    pub edges: usize,
    /// Circuit rank of the whole map.
    pub circuit_rank: usize,
    /// Polychromatic cycles `L − Σ L(Γ⁽ⁱ⁾)`.
    pub lm: usize,
    /// `L(Γ⁽ⁱ⁾)` for `i` in `1..=D`.
    pub color_ranks: Vec<usize>,
    /// `g(Γ⁽ⁱ⁾)` for `i` in `1..=D`.
    pub color_genera: Vec<usize>,
    /// `D + (D − 1)E − Σ F_int(Γ⁽ⁱ⁾)`.
    pub degree: i64,
    pub label: OrderLabel,
    /// `1 + (D − 1)(q + L_m(∂))` for `q ≥ 1` marked corners.
    pub boundary_bound: Option<i64>,
}

impl QuarticDecomposition {
    /// `D·L_m + (D − 2)Σ L(Γ⁽ⁱ⁾) + 2Σ g(Γ⁽ⁱ⁾)`.
    pub fn degree_from_cycles(&self, d: usize) -> i64 {
        let ranks: usize = self.color_ranks.iter().sum();
        let genera: usize = self.color_genera.iter().sum();
        (d * self.lm + (d - 2) * ranks + 2 * genera) as i64
    }
}

/// Structural order label.
pub fn order_label(d: usize, lm: usize, ranks: usize, genera: usize) -> OrderLabel {
    let one_poly = lm == 1 && ranks == 0;
    let two_mono = lm == 0 && ranks == 2 && genera == 0;
    match (lm, ranks) {
        (0, 0) => OrderLabel::Tree,
        (0, 1) => OrderLabel::MonochromaticCycle,
        _ if (d > 4 && one_poly) || (d == 4 && (one_poly || two_mono)) || (d == 3 && two_mono) => {
            OrderLabel::NextOrder
        }
        _ => OrderLabel::Higher,
    }
}

impl QuarticMap {
    /// A map from its rotation and one color per edge.
    pub fn new(
        d: usize,
        sigma: Vec<usize>,
        colors: Vec<usize>,
        marked: BTreeSet<usize>,
    ) -> Result<Self, StackedError> {
        if d < 3 {
            return Err(StackedError::NotQuartic(
                "needs at least three colors".into(),
            ));
        }
        if sigma.len() != 2 * colors.len() || colors.iter().any(|&c| c == 0 || c > d) {
            return Err(StackedError::NotQuartic("bad edge colors".into()));
        }
        let mut seen = vec![false; sigma.len()];
        if sigma
            .iter()
            .any(|&x| x >= seen.len() || std::mem::replace(&mut seen[x], true))
        {
            return Err(StackedError::NotQuartic(
                "rotation is not a permutation".into(),
            ));
        }
        let map = QuarticMap {
            d,
            sigma,
            colors,
            marked,
        };
        map.to_stacked()?;
        Ok(map)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.colors.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    fn alpha_color(&self, i: usize) -> Vec<usize> {
        (0..self.sigma.len())
            .map(|x| if self.colors[x / 2] == i { x ^ 1 } else { x })
            .collect()
    }

    /// The stacked map of the gluing.
    pub fn to_stacked(&self) -> Result<StackedMap, StackedError> {
        let mut succ = vec![inverse(&self.sigma)];
        for i in 1..=self.d {
            succ.push(self.alpha_color(i));
        }
        StackedMap::from_successors(self.d, succ, self.marked.clone())
    }

    /// The colored graph of the gluing with blacks `0..2E`, whites
    /// `2E..4E`.
    pub fn to_graph(&self) -> Result<ColoredGraph, StackedError> {
        Ok(crate::map::psi_inverse(&self.to_stacked()?).0)
    }

    /// Faces of `Γ⁽ⁱ⁾` as orbits of `α_i ∘ σ`; an orbit passes the corners it
    /// contains.
    fn faces(&self, i: usize) -> Vec<Vec<usize>> {
        colgraph_core::map::cycles(&compose(&self.alpha_color(i), &self.sigma))
    }

    /// Degree decomposition and order label.
    pub fn decomposition(&self) -> Result<QuarticDecomposition, StackedError> {
        let d = self.d;
        let darts = self.sigma.len();
        let edges = self.colors.len();
        let vertices = cycle_count(&self.sigma);
        let alpha: Vec<usize> = (0..darts).map(|x| x ^ 1).collect();
        let components = union_components(darts, [&self.sigma, &alpha]).1;
        let circuit_rank = edges + components - vertices;
        let mut color_ranks = Vec::with_capacity(d);
        let mut color_genera = Vec::with_capacity(d);
        let mut interior = 0;
        for i in 1..=d {
            let ai = self.alpha_color(i);
            let ei = self.colors.iter().filter(|&&c| c == i).count();
            let ki = union_components(darts, [&self.sigma, &ai]).1;
            let faces = self.faces(i);
            let chi = vertices as i64 - ei as i64 + faces.len() as i64;
            color_ranks.push(ei + ki - vertices);
            color_genera.push(((2 * ki as i64 - chi) / 2) as usize);
            interior += faces
                .iter()
                .filter(|f| f.iter().all(|x| !self.marked.contains(x)))
                .count();
        }
        let lm_value = circuit_rank - color_ranks.iter().sum::<usize>();
        let degree = d as i64 + ((d - 1) * edges) as i64 - interior as i64;
        let label = order_label(
            d,
            lm_value,
            color_ranks.iter().sum(),
            color_genera.iter().sum(),
        );
        let boundary_bound = if self.marked.is_empty() {
            None
        } else {
            let b = boundary_of_map(&self.to_stacked()?)?;
            let boundary_lm = lm(&b.graph, &b.pairing)?;
            Some(1 + ((d - 1) * (self.marked.len() + boundary_lm)) as i64)
        };
        Ok(QuarticDecomposition {
            edges,
            circuit_rank,
            lm: lm_value,
            color_ranks,
            color_genera,
            degree,
            label,
            boundary_bound,
        })
    }
}

/// Reads a closed gluing of quartic melonic bubbles as a quartic map. Each
/// bubble is paired canonically: every black vertex with the white vertex
/// joined to it by `D − 1` colors.
pub fn quartic_map(g: &ColoredGraph) -> Result<QuarticMap, StackedError> {
    let d = g.dimension();
    if d < 3 {
        return Err(StackedError::NotQuartic(
            "needs at least three colors".into(),
        ));
    }
    let colors: Vec<usize> = (1..=d).collect();
    for comp in g.components_with_colors(&colors) {
        if comp.len() != 4 {
            return Err(StackedError::NotQuartic(format!(
                "bubble with {} vertices",
                comp.len()
            )));
        }
    }
    let mut pairs = Vec::new();
    for b in g.blacks() {
        let w = (1..=d)
            .filter_map(|c| g.neighbor(b, c))
            .counts()
            .into_iter()
            .find(|&(_, k)| k == d - 1)
            .map(|(w, _)| w)
            .ok_or_else(|| {
                StackedError::NotQuartic(format!("vertex {} has no (D-1)-partner", b.0))
            })?;
        pairs.push((b, w));
    }
    let omega = Pairing::new(g, &pairs)?;
    let map = psi0(g, &omega)?;
    let n = map.square_count();
    let rot = map.zero_rotation();
    // renumber squares so that bubble partners are 2k, 2k + 1
    let (bubble, _) = map.bubble_labels();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&l| (bubble[l], l));
    let mut pos = vec![0; n];
    for (k, &l) in order.iter().enumerate() {
        pos[l] = k;
    }
    let sigma: Vec<usize> = (0..n).map(|k| pos[rot[order[k]]]).collect();
    let edge_colors: Vec<usize> = (0..n / 2)
        .map(|k| {
            let l = order[2 * k];
            (1..=d)
                .find(|&c| map.successor(c)[l] != l)
                .ok_or_else(|| StackedError::NotQuartic("bubble without crossing color".into()))
        })
        .collect::<Result<_, _>>()?;
    let marked = map.marked().iter().map(|&l| pos[l]).collect();
    QuarticMap::new(d, sigma, edge_colors, marked)
}

/// Canonical code of a connected map with the fixed involution `x ↔ x ^ 1`:
/// the least breadth-first relabeling over all roots.
pub fn canonical_code(sigma: &[usize]) -> Vec<usize> {
    let n = sigma.len();
    let mut best: Option<Vec<usize>> = None;
    let mut label = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        label.iter_mut().for_each(|x| *x = usize::MAX);
        queue.clear();
        label[root] = 0;
        queue.push(root);
        let mut head = 0;
        let mut code = Vec::with_capacity(2 * n);
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for y in [sigma[x], x ^ 1] {
                if label[y] == usize::MAX {
                    label[y] = queue.len();
                    queue.push(y);
                }
                code.push(label[y]);
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

/// Rotation of the map with the given canonical code, rooted at dart 0.
fn from_code(code: &[usize]) -> Vec<usize> {
    let n = code.len() / 2;
    let sigma: Vec<usize> = (0..n).map(|x| code[2 * x]).collect();
    let alpha: Vec<usize> = (0..n).map(|x| code[2 * x + 1]).collect();
    // rename darts so that the edge involution becomes x ^ 1
    let mut name = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if name[x] == usize::MAX {
            name[x] = next;
            name[alpha[x]] = next + 1;
            next += 2;
        }
    }
    let mut out = vec![0; n];
    for x in 0..n {
        out[name[x]] = name[sigma[x]];
    }
    out
}

/// One representative rotation per isomorphism class of connected maps
/// with `e` edges, in increasing order of canonical code.
pub fn connected_maps(e: usize) -> Vec<Vec<usize>> {
    let n = 2 * e;
    let alpha: Vec<usize> = (0..n).map(|x| x ^ 1).collect();
    let mut codes = BTreeSet::new();
    for sigma in (0..n).permutations(n) {
        if union_components(n, [&sigma, &alpha]).1 != 1 {
            continue;
        }
        codes.insert(canonical_code(&sigma));
    }
    codes.iter().map(|c| from_code(c)).collect()
}

/// Edge colorings with colors in `1..=d` up to renaming the colors: the
/// restricted growth strings with at most `d` blocks.
pub fn colorings(e: usize, d: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, max: usize, e: usize, d: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == e {
            out.push(prefix.iter().map(|c| c + 1).collect());
            return;
        }
        for c in 0..=(max + 1).min(d - 1) {
            prefix.push(c);
            grow(prefix, max.max(c), e, d, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if e == 0 {
        return vec![Vec::new()];
    }
    let mut prefix = vec![0];
    grow(&mut prefix, 0, e, d, &mut out);
    out
}

/// Label of each orbit of a permutation, exposed for face bookkeeping.
pub fn face_labels(p: &[usize]) -> Vec<usize> {
    orbit_labels(p).0
}

/// Builds the closed graph of a gluing of quartic melonic bubbles directly
/// from a rotation and edge colors, without going through stacked maps.
#[allow(clippy::needless_range_loop)]
pub fn quartic_graph_direct(d: usize, sigma: &[usize], colors: &[usize]) -> ColoredGraph {
    let n = sigma.len();
    let mut g = ColoredGraph::with_halves(d, n);
    for (k, &c) in colors.iter().enumerate() {
        let (x, y) = (2 * k, 2 * k + 1);
        for j in 1..=d {
            if j == c {
                g.add_edge(VertexId(x), VertexId(n + y), j)
                    .expect("fresh edge");
                g.add_edge(VertexId(y), VertexId(n + x), j)
                    .expect("fresh edge");
            } else {
                g.add_edge(VertexId(x), VertexId(n + x), j)
                    .expect("fresh edge");
                g.add_edge(VertexId(y), VertexId(n + y), j)
                    .expect("fresh edge");
            }
        }
    }
    for x in 0..n {
        // w_x is joined to b_{sigma(x)}
        g.add_edge(VertexId(sigma[x]), VertexId(n + x), 0)
            .expect("fresh edge");
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_map_counts() {
        // one edge: a loop or a bridge; two edges: 10 rooted maps
        assert_eq!(connected_maps(1).len(), 2);
        assert!(connected_maps(2).len() >= 4);
    }

    #[test]
    fn coloring_counts_are_bell_numbers() {
        assert_eq!(colorings(3, 3).len(), 5);
        assert_eq!(colorings(4, 4).len(), 15);
        assert_eq!(colorings(4, 2).len(), 8);
    }

    #[test]
    fn single_bridge_is_a_tree() {
        let m = QuarticMap::new(3, vec![0, 1], vec![1], BTreeSet::new()).unwrap();
        let dec = m.decomposition().unwrap();
        assert_eq!((dec.degree, dec.label), (0, OrderLabel::Tree));
    }

    #[test]
    fn single_loop_is_a_monochromatic_cycle() {
        let m = QuarticMap::new(4, vec![1, 0], vec![2], BTreeSet::new()).unwrap();
        let dec = m.decomposition().unwrap();
        assert_eq!((dec.degree, dec.label), (2, OrderLabel::MonochromaticCycle));
    }
}
