//! Stacked maps of coverings with marked colored corners.
//!
//! The pairs of a covering are white squares. Each cycle of
//! `σ_c = ω⁻¹∘p_c` is a colored vertex of color `c`, joined to the squares
//! it visits in cyclic order. The circuit rank of this bipartite map is the
//! order `δ₀` of the covering.

use std::collections::BTreeSet;

use colgraph_core::map::{cycle_count, cycles};
use colgraph_core::{ColoredGraph, EdgeId, VertexId};
use colgraph_pairings::{Layout, Pairing};

use crate::error::SykError;

/// A corner of a colored vertex: color `c` at square `square`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub color: usize,
    pub square: usize,
}

/// The stacked map of a covering, with marked corners on distinct colored
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SykMap {
    d: usize,
    /// `succ[c - 1][l]`: the square after `l` around its color-`c` vertex.
    succ: Vec<Vec<usize>>,
    marks: Vec<Corner>,
}

fn union_find_components(n: usize, perms: &[Vec<usize>]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
    }
    count
}

impl SykMap {
    /// Builds the map from successor permutations of colors `1..=D`.
    pub fn from_successors(succ: Vec<Vec<usize>>, marks: Vec<Corner>) -> Result<Self, SykError> {
        let d = succ.len();
        let k = succ.first().map_or(0, Vec::len);
        let map = SykMap {
            d,
            succ,
            marks: Vec::new(),
        };
        for p in &map.succ {
            let mut seen = vec![false; k];
            if p.len() != k
                || p.iter()
                    .any(|&x| x >= k || std::mem::replace(&mut seen[x], true))
            {
                return Err(SykError::NotACovering(
                    "successors are not permutations".into(),
                ));
            }
        }
        map.with_marks(marks)
    }

    /// The map of the bubble `b` with the pairing `omega`.
    pub fn from_bubble(b: &ColoredGraph, omega: &Pairing) -> Result<Self, SykError> {
        let layout = Layout::new(b)?;
        let positions = layout.positions(omega, b.vertex_count());
        Self::from_successors(layout.successors(&positions), Vec::new())
    }

    /// The map of a closed covering with colors `0..=D`: pairs are the
    /// color-0 edges, indexed by their black vertex in increasing order.
    /// Each marked colored edge marks the corner of its color at its pair.
    pub fn from_covering(g: &ColoredGraph, marked: &[EdgeId]) -> Result<Self, SykError> {
        let d = g.dimension();
        let colors: Vec<usize> = (0..=d).collect();
        g.require_regular(&colors)?;
        let blacks: Vec<VertexId> = g.blacks().collect();
        let mut pair_of = vec![usize::MAX; g.vertex_count()];
        for (k, &b) in blacks.iter().enumerate() {
            pair_of[b.0] = k;
            let w = g.neighbor(b, 0).expect("regular");
            pair_of[w.0] = k;
        }
        let succ = (1..=d)
            .map(|c| {
                blacks
                    .iter()
                    .map(|&b| pair_of[g.neighbor(b, c).expect("regular").0])
                    .collect()
            })
            .collect();
        let mut marks = Vec::with_capacity(marked.len());
        for &e in marked {
            let edge = g
                .edges()
                .get(e.0)
                .ok_or(SykError::InvalidMark(format!("unknown edge {}", e.0)))?;
            if edge.color == 0 {
                return Err(SykError::InvalidMark(format!("edge {} has color 0", e.0)));
            }
            marks.push(Corner {
                color: edge.color,
                square: pair_of[edge.black.0],
            });
        }
        Self::from_successors(succ, marks)
    }

    /// Replaces the marks, checking they sit on distinct colored vertices.
    pub fn with_marks(mut self, marks: Vec<Corner>) -> Result<Self, SykError> {
        let mut vertices = BTreeSet::new();
        for m in &marks {
            if m.color == 0 || m.color > self.d || m.square >= self.square_count() {
                return Err(SykError::InvalidMark(format!("no corner {m:?}")));
            }
            if !vertices.insert(self.colored_vertex(*m)) {
                return Err(SykError::InvalidMark(format!(
                    "two marks on the vertex of {m:?}"
                )));
            }
        }
        self.marks = marks;
        Ok(self)
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    /// Number of white squares, i.e. of pairs.
    pub fn square_count(&self) -> usize {
        self.succ.first().map_or(0, Vec::len)
    }

    pub fn successor(&self, c: usize) -> &[usize] {
        &self.succ[c - 1]
    }

    pub fn marks(&self) -> &[Corner] {
        &self.marks
    }

    /// The colored vertices of color `c`, each as its squares in cyclic
    /// order starting from the smallest.
    pub fn colored_vertices(&self, c: usize) -> Vec<Vec<usize>> {
        cycles(&self.succ[c - 1])
    }

    /// `(color, smallest square)` identifying the colored vertex of a corner.
    pub fn colored_vertex(&self, corner: Corner) -> (usize, usize) {
        let p = &self.succ[corner.color - 1];
        let mut min = corner.square;
        let mut x = p[corner.square];
        while x != corner.square {
            min = min.min(x);
            x = p[x];
        }
        (corner.color, min)
    }

    /// Number of colored vertices.
    pub fn colored_vertex_count(&self) -> usize {
        self.succ.iter().map(|p| cycle_count(p)).sum()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        union_find_components(self.square_count(), &self.succ)
    }

    /// Circuit rank `E − V + K` of the map: the order `δ₀`.
    pub fn circuit_rank(&self) -> usize {
        let k = self.square_count();
        k * self.d + self.component_count() - k - self.colored_vertex_count()
    }

    /// Exponent `1 − n − L` of `N` in the amplitude of the marked
    /// contribution.
    pub fn amplitude_exponent(&self) -> i64 {
        1 - self.marks.len() as i64 - self.circuit_rank() as i64
    }
}

/// The order `δ₀` of the covering of `b` by `omega`. The bubble must be
/// connected.
pub fn classify_order(b: &ColoredGraph, omega: &Pairing) -> Result<usize, SykError> {
    if !b.is_connected() {
        return Err(SykError::Disconnected);
    }
    Ok(SykMap::from_bubble(b, omega)?.circuit_rank())
}

/// Completes a graph with missing colored edges by the canonical rule: from
/// a vertex lacking color `i`, follow the path alternating colors `i` and
/// `0` to the other vertex lacking color `i`, and join them by a marked
/// color-`i` edge. Returns the covering and the added edges.
pub fn canonical_completion(g: &ColoredGraph) -> Result<(ColoredGraph, Vec<EdgeId>), SykError> {
    let d = g.dimension();
    if let Some(v) = g.vertices().find(|&v| g.neighbor(v, 0).is_none()) {
        return Err(SykError::NotACovering(format!(
            "vertex {} has no color-0 edge",
            v.0
        )));
    }
    let mut out = g.clone();
    let mut added = Vec::new();
    for i in 1..=d {
        let mut done = vec![false; g.vertex_count()];
        for start in g.vertices() {
            if g.neighbor(start, i).is_some() || done[start.0] {
                continue;
            }
            let mut v = start;
            loop {
                v = g.neighbor(v, 0).expect("color 0 is complete");
                match g.neighbor(v, i) {
                    None => break,
                    Some(u) => v = u,
                }
            }
            done[start.0] = true;
            done[v.0] = true;
            if g.side(start) == g.side(v) {
                return Err(SykError::NotACovering(
                    "canonical path joins two vertices of one side".into(),
                ));
            }
            added.push(out.add_edge(start, v, i)?);
        }
    }
    Ok((out, added))
}

/// Whether the bubble (colors `1..=D`) of a covering stays connected once
/// the given edges are removed.
pub fn bubble_connected_without(g: &ColoredGraph, removed: &[EdgeId]) -> bool {
    let removed: BTreeSet<EdgeId> = removed.iter().copied().collect();
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = n;
    for (k, e) in g.edges().iter().enumerate() {
        if e.color == 0 || removed.contains(&EdgeId(k)) {
            continue;
        }
        let (a, b) = (find(&mut parent, e.black.0), find(&mut parent, e.white.0));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count == 1 || n == 0
}
