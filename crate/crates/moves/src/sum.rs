//! Graph connected sums and their inverse.

use std::collections::BTreeSet;

use colgraph_core::{ColoredGraph, EdgeId, Side, VertexId};

use crate::error::MoveError;
use crate::rebuild::{rebuild, scores, separated, NewEdge};
use crate::record::{Move, MoveKind, MoveRecord, TopologyFlag};

/// Connected sum of two vertices of opposite sides lying in distinct
/// components of `g`: both are removed and their neighbors are joined color
/// by color.
pub fn join_components(
    g: &ColoredGraph,
    v1: VertexId,
    v2: VertexId,
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    for v in [v1, v2] {
        if v.0 >= g.vertex_count() {
            return Err(MoveError::Graph(colgraph_core::GraphError::UnknownVertex(
                v.0,
            )));
        }
    }
    if g.side(v1) == g.side(v2) {
        return Err(MoveError::SameSide);
    }
    let all = g.color_range();
    g.require_regular(&all)?;
    let every: Vec<usize> = (0..=g.dimension()).collect();
    if !separated(g, v1, v2, &every) {
        return Err(MoveError::SameComponent);
    }
    let mut touched = BTreeSet::new();
    let mut added: Vec<NewEdge> = Vec::new();
    for &c in &all {
        let (e1, e2) = (
            g.edge_at(v1, c).expect("regular"),
            g.edge_at(v2, c).expect("regular"),
        );
        touched.insert(e1);
        touched.insert(e2);
        let (a, b) = (
            g.neighbor(v1, c).expect("regular"),
            g.neighbor(v2, c).expect("regular"),
        );
        added.push((a, b, c, g.is_marked(e1) || g.is_marked(e2)));
    }
    let out = rebuild(g, &[v1, v2], &touched, &[], &added)?;
    let (before, after) = (scores(g), scores(&out.graph));
    let record = MoveRecord {
        kind: MoveKind::ConnectedSum,
        vertices: vec![v1, v2],
        edges: touched.into_iter().collect(),
        created: out.created.clone(),
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: TopologyFlag::ConnectedSum,
        separated_colors: None,
        vertex_remap: out.vertex_remap,
        edge_remap: out.edge_remap,
        inverse: Move::Split(out.created),
    };
    Ok((out.graph, record))
}

/// Connected sum of `g1` at `v1` and `g2` at `v2`. Vertices of `g1` come
/// first in the result; the record indexes the disjoint union, with `g2`
/// shifted by the vertex and edge counts of `g1`.
pub fn connected_sum(
    g1: &ColoredGraph,
    v1: VertexId,
    g2: &ColoredGraph,
    v2: VertexId,
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    if g1.dimension() != g2.dimension() || g1.color_range() != g2.color_range() {
        return Err(MoveError::DimensionMismatch);
    }
    if v2.0 >= g2.vertex_count() {
        return Err(MoveError::Graph(colgraph_core::GraphError::UnknownVertex(
            v2.0,
        )));
    }
    let union = g1.disjoint_union(g2)?;
    join_components(&union, v1, VertexId(v2.0 + g1.vertex_count()))
}

/// Cuts one edge of each color and closes both sides with a new vertex: an
/// edge `(x, y)` becomes `(x, w)` and `(b, y)` with `b` black and `w` white
/// appended last. The result must have one more component, with `b` and `w`
/// on different sides of the cut.
pub fn connected_split(
    g: &ColoredGraph,
    edges: &[EdgeId],
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    let all = g.color_range();
    g.require_regular(&all)?;
    for e in edges {
        if e.0 >= g.edge_count() {
            return Err(MoveError::Graph(colgraph_core::GraphError::UnknownEdge(
                e.0,
            )));
        }
    }
    let mut colors: Vec<usize> = edges.iter().map(|&e| g.edge(e).color).collect();
    colors.sort_unstable();
    if colors != all {
        return Err(MoveError::ColorMismatch(format!(
            "need one edge of each color {all:?}, got colors {colors:?}"
        )));
    }
    let n = g.vertex_count();
    let (b, w) = (VertexId(n), VertexId(n + 1));
    let mut added: Vec<NewEdge> = Vec::new();
    for &e in edges {
        let edge = g.edge(e);
        added.push((edge.black, w, edge.color, g.is_marked(e)));
        added.push((b, edge.white, edge.color, g.is_marked(e)));
    }
    let removed: BTreeSet<EdgeId> = edges.iter().copied().collect();
    let out = rebuild(g, &[], &removed, &[Side::Black, Side::White], &added)?;
    let every: Vec<usize> = (0..=g.dimension()).collect();
    if out.graph.connected_components().len() != g.connected_components().len() + 1
        || !separated(&out.graph, b, w, &every)
    {
        return Err(MoveError::NotAnEdgeCut(
            "the cut does not split one component in two".into(),
        ));
    }
    let (before, after) = (scores(g), scores(&out.graph));
    let record = MoveRecord {
        kind: MoveKind::ConnectedSplit,
        vertices: Vec::new(),
        edges: edges.to_vec(),
        created: out.created.clone(),
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: TopologyFlag::ConnectedSum,
        separated_colors: None,
        vertex_remap: out.vertex_remap,
        edge_remap: out.edge_remap,
        inverse: Move::Join(b, w),
    };
    Ok((out.graph, record))
}
