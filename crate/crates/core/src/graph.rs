//! The colored graph data model.
//!
//! A [`ColoredGraph`] is a bipartite multigraph whose edges carry colors in
//! `0..=D`. Vertex sides are stored explicitly and edges have stable indices,
//! so that marked edges and moves can refer to edges rather than endpoints.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use crate::error::GraphError;

/// Index of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Stable index of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

/// Bicoloring of the vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Black,
    White,
}

impl Side {
    /// The other side.
    pub fn opposite(self) -> Side {
        match self {
            Side::Black => Side::White,
            Side::White => Side::Black,
        }
    }
}

/// A colored edge, stored with its black endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub black: VertexId,
    pub white: VertexId,
    pub color: usize,
}

impl Edge {
    /// The endpoint opposite to `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if v == self.black {
            self.white
        } else {
            self.black
        }
    }
}

/// A bipartite properly edge-colored multigraph with colors in `0..=D`.
///
/// Each vertex carries at most one edge of each color. Closed graphs have all
/// colors `0..=D` at every vertex, bubbles have exactly the colors `1..=D`,
/// and boundary-case graphs miss color 0 at `q` black and `q` white vertices.
/// Marked edges are color-0 edges that are treated as absent by the scores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    d: usize,
    sides: Vec<Side>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<Option<EdgeId>>>,
    marked: BTreeSet<EdgeId>,
}

impl ColoredGraph {
    /// An edgeless graph of dimension `d` with the given vertex sides.
    pub fn new(d: usize, sides: Vec<Side>) -> Self {
        let incidence = vec![vec![None; d + 1]; sides.len()];
        ColoredGraph {
            d,
            sides,
            edges: Vec::new(),
            incidence,
            marked: BTreeSet::new(),
        }
    }

    /// An edgeless graph with `n` black vertices `0..n` followed by `n` white
    /// vertices `n..2n`.
    pub fn with_halves(d: usize, n: usize) -> Self {
        let mut sides = vec![Side::Black; n];
        sides.extend(std::iter::repeat_n(Side::White, n));
        Self::new(d, sides)
    }

    /// Builds a closed or bubble graph from per-color permutations.
    ///
    /// Black vertex `b` is `b`, white vertex `w` is `n + w`, and
    /// `perms[k]` maps black to white for color `colors[k]`.
    pub fn from_permutations(
        d: usize,
        colors: &[usize],
        perms: &[Vec<usize>],
    ) -> Result<Self, GraphError> {
        let n = perms.first().map_or(0, Vec::len);
        let mut g = Self::with_halves(d, n);
        for (&c, p) in colors.iter().zip(perms) {
            for (b, &w) in p.iter().enumerate() {
                g.add_edge(VertexId(b), VertexId(n + w), c)?;
            }
        }
        Ok(g)
    }

    /// Adds an edge of color `color` between `u` and `v`.
    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        color: usize,
    ) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x.0 >= self.sides.len() {
                return Err(GraphError::UnknownVertex(x.0));
            }
        }
        if color > self.d {
            return Err(GraphError::ColorOutOfRange { color, max: self.d });
        }
        if self.sides[u.0] == self.sides[v.0] {
            return Err(GraphError::NonBipartite(u.0, v.0));
        }
        for x in [u, v] {
            if self.incidence[x.0][color].is_some() {
                return Err(GraphError::DuplicateColor { vertex: x.0, color });
            }
        }
        let (black, white) = if self.sides[u.0] == Side::Black {
            (u, v)
        } else {
            (v, u)
        };
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            black,
            white,
            color,
        });
        self.incidence[black.0][color] = Some(id);
        self.incidence[white.0][color] = Some(id);
        Ok(id)
    }

    /// Appends a vertex and returns its index.
    pub fn add_vertex(&mut self, side: Side) -> VertexId {
        self.sides.push(side);
        self.incidence.push(vec![None; self.d + 1]);
        VertexId(self.sides.len() - 1)
    }

    /// Marks a color-0 edge.
    pub fn mark_edge(&mut self, e: EdgeId) -> Result<(), GraphError> {
        let edge = self.edges.get(e.0).ok_or(GraphError::UnknownEdge(e.0))?;
        if edge.color != 0 {
            return Err(GraphError::MarkedNonZero(e.0));
        }
        self.marked.insert(e);
        Ok(())
    }

    /// Removes every mark.
    pub fn unmarked(&self) -> ColoredGraph {
        let mut g = self.clone();
        g.marked.clear();
        g
    }

    /// The dimension `D` (largest admissible color).
    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.sides.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn side(&self, v: VertexId) -> Side {
        self.sides[v.0]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn marked_edges(&self) -> &BTreeSet<EdgeId> {
        &self.marked
    }

    pub fn is_marked(&self, e: EdgeId) -> bool {
        self.marked.contains(&e)
    }

    /// Vertex indices in increasing order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.sides.len()).map(VertexId)
    }

    pub fn blacks(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.sides[v.0] == Side::Black)
    }

    pub fn whites(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.sides[v.0] == Side::White)
    }

    /// The edge of color `c` at `v`, marked or not.
    pub fn edge_at(&self, v: VertexId, c: usize) -> Option<EdgeId> {
        self.incidence[v.0].get(c).copied().flatten()
    }

    /// The neighbor of `v` along color `c`, marked edges included.
    pub fn neighbor(&self, v: VertexId, c: usize) -> Option<VertexId> {
        self.edge_at(v, c).map(|e| self.edges[e.0].other(v))
    }

    /// The edge of color `c` at `v`, ignoring marked edges.
    pub fn live_edge_at(&self, v: VertexId, c: usize) -> Option<EdgeId> {
        self.edge_at(v, c).filter(|e| !self.marked.contains(e))
    }

    /// The neighbor of `v` along color `c`, ignoring marked edges.
    pub fn live_neighbor(&self, v: VertexId, c: usize) -> Option<VertexId> {
        self.live_edge_at(v, c).map(|e| self.edges[e.0].other(v))
    }

    /// Colors carried by at least one edge, in increasing order.
    pub fn colors_present(&self) -> Vec<usize> {
        let mut seen = vec![false; self.d + 1];
        for e in &self.edges {
            seen[e.color] = true;
        }
        (0..=self.d).filter(|&c| seen[c]).collect()
    }

    /// The color range a regular graph of this kind uses: `0..=D` when any
    /// color-0 edge exists, `1..=D` otherwise.
    pub fn color_range(&self) -> Vec<usize> {
        if self.edges.iter().any(|e| e.color == 0) {
            (0..=self.d).collect()
        } else {
            (1..=self.d).collect()
        }
    }

    /// Checks that every vertex carries exactly the colors of `colors`.
    pub fn require_regular(&self, colors: &[usize]) -> Result<(), GraphError> {
        for v in self.vertices() {
            for c in 0..=self.d {
                let expected = colors.contains(&c);
                if self.edge_at(v, c).is_some() != expected {
                    return Err(GraphError::NotRegular(format!(
                        "vertex {} color {} {}",
                        v.0,
                        c,
                        if expected { "missing" } else { "unexpected" }
                    )));
                }
            }
        }
        Ok(())
    }

    /// Connected components of the subgraph spanned by `colors`, each sorted,
    /// ordered by smallest vertex. Marked edges count as present.
    pub fn components_with_colors(&self, colors: &[usize]) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut uf = UnionFind::<usize>::new(n);
        for e in &self.edges {
            if colors.contains(&e.color) {
                uf.union(e.black.0, e.white.0);
            }
        }
        let mut index = vec![usize::MAX; n];
        let mut comps: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index[r]].push(VertexId(v));
        }
        comps
    }

    /// Number of connected components on the colors `colors`.
    pub fn count_components_with_colors(&self, colors: &[usize]) -> usize {
        self.components_with_colors(colors).len()
    }

    /// Connected components using every edge.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let all: Vec<usize> = (0..=self.d).collect();
        self.components_with_colors(&all)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    /// Marks are kept on surviving edges.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> ColoredGraph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, v) in vertices.iter().enumerate() {
            index[v.0] = i;
        }
        let sides = vertices.iter().map(|v| self.sides[v.0]).collect();
        let mut g = ColoredGraph::new(self.d, sides);
        for (k, e) in self.edges.iter().enumerate() {
            let (b, w) = (index[e.black.0], index[e.white.0]);
            if b != usize::MAX && w != usize::MAX {
                let id = g
                    .add_edge(VertexId(b), VertexId(w), e.color)
                    .expect("induced edges stay proper");
                if self.marked.contains(&EdgeId(k)) {
                    g.marked.insert(id);
                }
            }
        }
        g
    }

    /// The graph with the given edges removed. Returns the old-to-new edge
    /// index table.
    pub fn without_edges(&self, removed: &BTreeSet<EdgeId>) -> (ColoredGraph, Vec<Option<EdgeId>>) {
        let mut g = ColoredGraph::new(self.d, self.sides.clone());
        let mut remap = vec![None; self.edges.len()];
        for (k, e) in self.edges.iter().enumerate() {
            if removed.contains(&EdgeId(k)) {
                continue;
            }
            let id = g
                .add_edge(e.black, e.white, e.color)
                .expect("subset stays proper");
            if self.marked.contains(&EdgeId(k)) {
                g.marked.insert(id);
            }
            remap[k] = Some(id);
        }
        (g, remap)
    }

    /// The graph with all edges of color `c` removed.
    pub fn without_color(&self, c: usize) -> ColoredGraph {
        let removed = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.color == c)
            .map(|(k, _)| EdgeId(k))
            .collect();
        self.without_edges(&removed).0
    }

    /// The graph with its marked edges deleted.
    pub fn open_part(&self) -> ColoredGraph {
        let marked = self.marked.clone();
        self.without_edges(&marked).0
    }

    /// Disjoint union, with the vertices of `other` shifted after those of
    /// `self`.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> Result<ColoredGraph, GraphError> {
        if other.d != self.d {
            return Err(GraphError::WrongDimension {
                expected: self.d,
                found: other.d,
            });
        }
        let mut g = self.clone();
        let shift = g.vertex_count();
        for &s in &other.sides {
            g.add_vertex(s);
        }
        for (k, e) in other.edges.iter().enumerate() {
            let id = g.add_edge(
                VertexId(e.black.0 + shift),
                VertexId(e.white.0 + shift),
                e.color,
            )?;
            if other.marked.contains(&EdgeId(k)) {
                g.marked.insert(id);
            }
        }
        Ok(g)
    }

    /// Applies a color relabeling `map[old] = new` and a new dimension.
    pub fn relabel_colors(&self, d: usize, map: &[usize]) -> Result<ColoredGraph, GraphError> {
        let mut g = ColoredGraph::new(d, self.sides.clone());
        for e in &self.edges {
            g.add_edge(e.black, e.white, map[e.color])?;
        }
        for &m in &self.marked {
            g.mark_edge(m)?;
        }
        Ok(g)
    }

    /// Renames vertex `v` to `perm[v]`, keeping edge order.
    pub fn permute_vertices(&self, perm: &[usize]) -> ColoredGraph {
        let mut sides = vec![Side::Black; self.vertex_count()];
        for (v, &p) in perm.iter().enumerate() {
            sides[p] = self.sides[v];
        }
        let mut g = ColoredGraph::new(self.d, sides);
        for e in &self.edges {
            g.add_edge(
                VertexId(perm[e.black.0]),
                VertexId(perm[e.white.0]),
                e.color,
            )
            .expect("relabeling preserves properness");
        }
        g.marked = self.marked.clone();
        g
    }

    /// Black vertices followed by white vertices, each in increasing order.
    pub fn split_sides(&self) -> (Vec<VertexId>, Vec<VertexId>) {
        (self.blacks().collect(), self.whites().collect())
    }

    /// Per-color maps from black index to white index (positions within
    /// [`split_sides`](Self::split_sides)); `None` for a missing edge.
    pub fn color_maps(&self) -> Vec<Vec<Option<usize>>> {
        let (blacks, whites) = self.split_sides();
        let mut wpos = vec![usize::MAX; self.vertex_count()];
        for (i, w) in whites.iter().enumerate() {
            wpos[w.0] = i;
        }
        (0..=self.d)
            .map(|c| {
                blacks
                    .iter()
                    .map(|&b| self.neighbor(b, c).map(|w| wpos[w.0]))
                    .collect()
            })
            .collect()
    }
}
