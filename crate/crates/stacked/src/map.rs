//! Stacked maps and the bijections with paired colored graphs.
//!
//! A pair `l = (b_l, w_l)` of the pairing becomes a white square `l`. For
//! every color `c`, the squares are arranged around color-`c` stars by the
//! successor permutation `succ_c`: `succ_c(l)` is the square of the white
//! vertex joined to `b_l` by color `c`. The stars of color `c` are the cycles
//! of `succ_c`. Color-0 stars use the opposite orientation, given by
//! [`StackedMap::zero_rotation`], so that the bicolored `(0, i)` faces are
//! untwisted: they are the orbits of `succ_i ∘ succ_0⁻¹`.
//!
//! A corner `l` of a color-0 star sits between `l` and its rotation image.
//! It is marked when the color-0 edge at `w_l` is marked.

use std::collections::BTreeSet;

use colgraph_core::map::{compose, cycle_count, inverse};
use colgraph_core::{ColoredGraph, VertexId};
use colgraph_pairings::{pairing_from_color, Pairing};
use petgraph::unionfind::UnionFind;

use crate::error::StackedError;

/// A stacked map on `n` white squares with colors `0..=D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StackedMap {
    d: usize,
    succ: Vec<Vec<usize>>,
    marked: BTreeSet<usize>,
    leaf_color: Option<usize>,
}

/// Cycles of a permutation as a label per element plus the cycle count.
pub(crate) fn orbit_labels(p: &[usize]) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while label[x] == usize::MAX {
            label[x] = count;
            x = p[x];
        }
        count += 1;
    }
    (label, count)
}

/// Number of classes of `0..n` under the union of the given permutations.
pub(crate) fn union_components<'a>(
    n: usize,
    perms: impl IntoIterator<Item = &'a Vec<usize>>,
) -> (Vec<usize>, usize) {
    let mut uf = UnionFind::<usize>::new(n);
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            uf.union(x, y);
        }
    }
    let mut ids = vec![usize::MAX; n];
    let mut label = vec![0; n];
    let mut count = 0;
    for (x, slot) in label.iter_mut().enumerate() {
        let r = uf.find(x);
        if ids[r] == usize::MAX {
            ids[r] = count;
            count += 1;
        }
        *slot = ids[r];
    }
    (label, count)
}

/// Face data of one bicolored `(0, i)` submap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeroSubmap {
    pub color: usize,
    pub faces: usize,
    /// Faces meeting no marked corner.
    pub interior_faces: usize,
    pub circuit_rank: usize,
    /// Orientable genus summed over components.
    pub genus: usize,
    pub components: usize,
}

/// Face and cycle accounting of a stacked map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmapReport {
    pub zero: Vec<ZeroSubmap>,
    /// Circuit rank of the whole map.
    pub circuit_rank: usize,
    /// Circuit rank of the projected map, bubbles collapsed.
    pub projected_rank: usize,
    pub components: usize,
}

impl SubmapReport {
    /// `Σ F_int` over the `(0, i)` submaps.
    pub fn zero_score(&self) -> usize {
        self.zero.iter().map(|z| z.interior_faces).sum()
    }
}

/// Result of a face exploration started at one white square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exploration {
    /// Squares reached on their black vertex (outgoing faces).
    pub out_visits: Vec<bool>,
    /// Squares reached on their white vertex (ingoing faces).
    pub in_visits: Vec<bool>,
}

impl Exploration {
    /// Number of appearances of square `l`: 0, 1 or 2.
    pub fn appearances(&self, l: usize) -> usize {
        usize::from(self.out_visits[l]) + usize::from(self.in_visits[l])
    }

    /// Squares visited exactly once.
    pub fn once_visited(&self) -> Vec<usize> {
        (0..self.out_visits.len())
            .filter(|&l| self.appearances(l) == 1)
            .collect()
    }

    /// True when every square appears twice.
    pub fn complete(&self) -> bool {
        (0..self.out_visits.len()).all(|l| self.appearances(l) == 2)
    }
}

impl StackedMap {
    /// Builds a map from successor permutations for the colors `0..=d` and
    /// the set of marked corners.
    pub fn from_successors(
        d: usize,
        succ: Vec<Vec<usize>>,
        marked: BTreeSet<usize>,
    ) -> Result<Self, StackedError> {
        let n = succ.first().map_or(0, Vec::len);
        if succ.len() != d + 1 {
            return Err(StackedError::NotClosed(format!(
                "{} colors given, {} expected",
                succ.len(),
                d + 1
            )));
        }
        for p in &succ {
            let mut seen = vec![false; n];
            for &x in p {
                if p.len() != n || x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(StackedError::NotClosed(
                        "successor is not a permutation".into(),
                    ));
                }
            }
        }
        if marked.iter().any(|&l| l >= n) {
            return Err(StackedError::NotClosed("marked corner out of range".into()));
        }
        let map = StackedMap {
            d,
            succ,
            marked,
            leaf_color: None,
        };
        map.check_marks()?;
        Ok(map)
    }

    fn check_marks(&self) -> Result<(), StackedError> {
        let (star, _) = orbit_labels(&self.succ[0]);
        let mut used = BTreeSet::new();
        for &l in &self.marked {
            if !used.insert(star[l]) {
                return Err(StackedError::TooManyMarks);
            }
        }
        Ok(())
    }

    /// Largest color.
    pub fn dimension(&self) -> usize {
        self.d
    }

    /// Number of white squares.
    pub fn square_count(&self) -> usize {
        self.succ[0].len()
    }

    /// Successor permutation of color `c`.
    pub fn successor(&self, c: usize) -> &[usize] {
        &self.succ[c]
    }

    /// Marked corners.
    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    /// Color whose stars are all leaves and may be elided, if recorded.
    pub fn leaf_color(&self) -> Option<usize> {
        self.leaf_color
    }

    /// Same map with no marked corner.
    pub fn unmarked(&self) -> StackedMap {
        StackedMap {
            marked: BTreeSet::new(),
            ..self.clone()
        }
    }

    /// Marks corner `l`.
    pub fn with_mark(&self, l: usize) -> Result<StackedMap, StackedError> {
        let mut m = self.clone();
        m.marked.insert(l);
        m.check_marks()?;
        Ok(m)
    }

    /// Rotation of the color-0 stars: `zero_rotation()[l]` is the square of
    /// the black vertex joined to `w_l` by color 0.
    pub fn zero_rotation(&self) -> Vec<usize> {
        inverse(&self.succ[0])
    }

    /// Rebuilds the map from a new color-0 rotation.
    pub(crate) fn with_zero_rotation(
        &self,
        rot: &[usize],
        marked: BTreeSet<usize>,
    ) -> Result<StackedMap, StackedError> {
        let mut m = self.clone();
        m.succ[0] = inverse(rot);
        m.marked = marked;
        m.check_marks()?;
        Ok(m)
    }

    /// Color-`c` stars as cycles of squares.
    pub fn stars(&self, c: usize) -> Vec<Vec<usize>> {
        let p = if c == 0 {
            self.zero_rotation()
        } else {
            self.succ[c].clone()
        };
        colgraph_core::map::cycles(&p)
    }

    /// Faces of the `(0, i)` submap, each given by the corners it passes.
    pub fn zero_faces(&self, i: usize) -> Vec<Vec<usize>> {
        let rot = self.zero_rotation();
        let face = compose(&self.succ[i], &rot);
        colgraph_core::map::cycles(&face)
    }

    /// Face label of every corner in the `(0, i)` submap.
    pub fn zero_face_labels(&self, i: usize) -> Vec<usize> {
        let rot = self.zero_rotation();
        orbit_labels(&compose(&self.succ[i], &rot)).0
    }

    /// Interior faces of the `(0, i)` submap.
    pub fn interior_faces(&self, i: usize) -> usize {
        self.zero_faces(i)
            .iter()
            .filter(|f| f.iter().all(|l| !self.marked.contains(l)))
            .count()
    }

    /// 0-score of the underlying graph: `Σᵢ F_int` of the `(0, i)` submaps.
    pub fn zero_score(&self) -> usize {
        (1..=self.d).map(|i| self.interior_faces(i)).sum()
    }

    /// Faces of the twisted `(i, j)` submap, equal to the `(i, j)` cycles of
    /// the underlying graph.
    pub fn twisted_face_count(&self, i: usize, j: usize) -> usize {
        cycle_count(&compose(&inverse(&self.succ[j]), &self.succ[i]))
    }

    /// Score of the underlying graph from the twisted submaps, marked edges
    /// counted as present.
    pub fn score(&self) -> usize {
        let mut total = 0;
        for i in 0..=self.d {
            for j in i + 1..=self.d {
                total += self.twisted_face_count(i, j);
            }
        }
        total
    }

    /// Connected components as a label per square, and their number.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        union_components(self.square_count(), &self.succ)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// Circuit rank of the map as a graph on squares and stars.
    pub fn circuit_rank(&self) -> usize {
        let n = self.square_count();
        let stars: usize = self.succ.iter().map(|p| cycle_count(p)).sum();
        (self.d + 1) * n + self.component_count() - n - stars
    }

    /// Bubbles as a label per square: the classes under colors `1..=D`.
    pub fn bubble_labels(&self) -> (Vec<usize>, usize) {
        union_components(self.square_count(), &self.succ[1..])
    }

    /// Circuit rank of the projected map: bubbles and color-0 stars as
    /// vertices, squares as edges.
    pub fn projected_rank(&self) -> usize {
        let n = self.square_count();
        let bubbles = self.bubble_labels().1;
        let zero_stars = cycle_count(&self.succ[0]);
        n + self.component_count() - bubbles - zero_stars
    }

    /// True when the projected map is a forest.
    pub fn is_tree(&self) -> bool {
        self.projected_rank() == 0
    }

    /// Face and cycle data of the `(0, i)` submap.
    pub fn zero_submap(&self, i: usize) -> ZeroSubmap {
        let n = self.square_count();
        let faces = self.zero_faces(i);
        let interior_faces = faces
            .iter()
            .filter(|f| f.iter().all(|l| !self.marked.contains(l)))
            .count();
        let vertices = n + cycle_count(&self.succ[0]) + cycle_count(&self.succ[i]);
        let edges = 2 * n;
        let components = union_components(n, [&self.succ[0], &self.succ[i]]).1;
        let circuit_rank = edges + components - vertices;
        let chi = vertices as i64 - edges as i64 + faces.len() as i64;
        let genus = ((2 * components as i64 - chi) / 2) as usize;
        ZeroSubmap {
            color: i,
            faces: faces.len(),
            interior_faces,
            circuit_rank,
            genus,
            components,
        }
    }

    /// Full accounting of the bicolored submaps.
    pub fn report(&self) -> SubmapReport {
        SubmapReport {
            zero: (1..=self.d).map(|i| self.zero_submap(i)).collect(),
            circuit_rank: self.circuit_rank(),
            projected_rank: self.projected_rank(),
            components: self.component_count(),
        }
    }

    /// Face exploration from square `start`, alternating outgoing faces (at
    /// black vertices) and ingoing faces (at white vertices). Faces through
    /// marked corners are skipped.
    #[allow(clippy::needless_range_loop)]
    pub fn face_exploration(&self, start: usize) -> Exploration {
        let n = self.square_count();
        let inv: Vec<Vec<usize>> = self.succ.iter().map(|p| inverse(p)).collect();
        let mut out_visits = vec![false; n];
        let mut in_visits = vec![false; n];
        let mut frontier_out = vec![start];
        out_visits[start] = true;
        while !frontier_out.is_empty() {
            let mut frontier_in = Vec::new();
            for &l in &frontier_out {
                for c in 0..=self.d {
                    let m = self.succ[c][l];
                    if c == 0 && self.marked.contains(&m) {
                        continue;
                    }
                    if !in_visits[m] {
                        in_visits[m] = true;
                        frontier_in.push(m);
                    }
                }
            }
            frontier_out.clear();
            for &m in &frontier_in {
                for c in 0..=self.d {
                    if c == 0 && self.marked.contains(&m) {
                        continue;
                    }
                    let l = inv[c][m];
                    if !out_visits[l] {
                        out_visits[l] = true;
                        frontier_out.push(l);
                    }
                }
            }
        }
        Exploration {
            out_visits,
            in_visits,
        }
    }

    /// True iff the underlying graph, marked edges removed, is connected.
    pub fn face_exploration_connected(&self) -> bool {
        self.square_count() == 0 || self.face_exploration(0).complete()
    }
}

/// Ψ: the stacked map of a closed graph with a pairing of its vertices.
pub fn psi(g: &ColoredGraph, omega: &Pairing) -> Result<StackedMap, StackedError> {
    let d = g.dimension();
    let colors: Vec<usize> = (0..=d).collect();
    g.require_regular(&colors)
        .map_err(|e| StackedError::NotClosed(e.to_string()))?;
    if 2 * omega.len() != g.vertex_count() {
        return Err(colgraph_pairings::PairingError::Mismatched(
            "pairing size differs from the graph".into(),
        )
        .into());
    }
    let pair = omega.pair_index(g.vertex_count());
    let succ = (0..=d)
        .map(|c| {
            omega
                .pairs()
                .iter()
                .map(|&(b, _)| pair[g.neighbor(b, c).expect("regular graph").0])
                .collect()
        })
        .collect();
    let marked = g
        .marked_edges()
        .iter()
        .map(|&e| pair[g.edge(e).white.0])
        .collect();
    StackedMap::from_successors(d, succ, marked)
}

/// Ψ⁻¹: the graph with blacks `0..n`, whites `n..2n`, and the pairing
/// `(l, n + l)`.
pub fn psi_inverse(map: &StackedMap) -> (ColoredGraph, Pairing) {
    let n = map.square_count();
    let mut g = ColoredGraph::with_halves(map.d, n);
    for c in 0..=map.d {
        for l in 0..n {
            let e = g
                .add_edge(VertexId(l), VertexId(n + map.succ[c][l]), c)
                .expect("successors are permutations");
            if c == 0 && map.marked.contains(&map.succ[0][l]) {
                g.mark_edge(e).expect("color-0 edge");
            }
        }
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..n).map(|l| (VertexId(l), VertexId(n + l))).collect();
    let omega = Pairing::new(&g, &pairs).expect("valid pairing");
    (g, omega)
}

/// Ψ₀: the stacked map of a gluing of bubbles, with a pairing inside each
/// bubble.
pub fn psi0(g: &ColoredGraph, omega: &Pairing) -> Result<StackedMap, StackedError> {
    let colors: Vec<usize> = (1..=g.dimension()).collect();
    let mut bubble = vec![0; g.vertex_count()];
    for (k, comp) in g.components_with_colors(&colors).iter().enumerate() {
        for v in comp {
            bubble[v.0] = k;
        }
    }
    for (l, &(b, w)) in omega.pairs().iter().enumerate() {
        if bubble[b.0] != bubble[w.0] {
            return Err(StackedError::PairAcrossBubbles(l));
        }
    }
    psi(g, omega)
}

/// The map induced by the pairing along color `i`; color-`i` stars are
/// leaves and recorded as elidable.
pub fn psi_color(g: &ColoredGraph, i: usize) -> Result<StackedMap, StackedError> {
    if i > g.dimension() {
        return Err(StackedError::ColorOutOfRange {
            color: i,
            max: g.dimension(),
        });
    }
    if i == 0 && !g.marked_edges().is_empty() {
        return Err(StackedError::NotClosed(
            "color-0 pairing with marked edges".into(),
        ));
    }
    let omega = pairing_from_color(g, i)?;
    let mut map = psi(g, &omega)?;
    map.leaf_color = Some(i);
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use colgraph_core::fixtures::melon;

    #[test]
    fn melon_is_a_single_square_with_leaves() {
        let g = melon(3);
        let omega = Pairing::new(&g, &[(VertexId(0), VertexId(1))]).unwrap();
        let m = psi(&g, &omega).unwrap();
        assert_eq!(m.square_count(), 1);
        assert_eq!(m.circuit_rank(), 0);
        assert_eq!(m.zero_score(), 3);
        assert_eq!(m.score(), 6);
    }

    #[test]
    fn orbit_labels_count_cycles() {
        assert_eq!(orbit_labels(&[1, 0, 2]).1, 2);
        assert_eq!(union_components(3, [&vec![1, 0, 2]]).1, 2);
    }
}
