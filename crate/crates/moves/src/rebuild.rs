//! Graph surgery shared by the moves, sphere certificates and score
//! bookkeeping.

use std::collections::BTreeSet;

use colgraph_core::{
    gurau_degree, jackets, score, zero_score, ColoredGraph, EdgeId, Side, VertexId,
};

use crate::error::MoveError;

/// A graph rebuilt from another one, with index tables.
pub(crate) struct Rebuilt {
    pub graph: ColoredGraph,
    pub vertex_remap: Vec<Option<VertexId>>,
    pub edge_remap: Vec<Option<EdgeId>>,
    /// New indices of the added edges, in the order given.
    pub created: Vec<EdgeId>,
}

/// An edge to add, in the extended indexing where new vertex `k` is
/// `n + k`. The flag asks for a mark.
pub(crate) type NewEdge = (VertexId, VertexId, usize, bool);

/// Removes vertices (with their edges) and edges, appends vertices of the
/// given sides and then the given edges. Kept vertices and edges keep their
/// relative order and their marks.
pub(crate) fn rebuild(
    g: &ColoredGraph,
    removed_vertices: &[VertexId],
    removed_edges: &BTreeSet<EdgeId>,
    new_sides: &[Side],
    added: &[NewEdge],
) -> Result<Rebuilt, MoveError> {
    let n = g.vertex_count();
    let mut vertex_remap = vec![None; n];
    let mut sides = Vec::with_capacity(n + new_sides.len());
    let mut extended = vec![usize::MAX; n + new_sides.len()];
    for v in g.vertices() {
        if !removed_vertices.contains(&v) {
            vertex_remap[v.0] = Some(VertexId(sides.len()));
            extended[v.0] = sides.len();
            sides.push(g.side(v));
        }
    }
    for (k, &s) in new_sides.iter().enumerate() {
        extended[n + k] = sides.len();
        sides.push(s);
    }
    let mut graph = ColoredGraph::new(g.dimension(), sides);
    let mut edge_remap = vec![None; g.edge_count()];
    for (k, e) in g.edges().iter().enumerate() {
        let id = EdgeId(k);
        let (b, w) = (vertex_remap[e.black.0], vertex_remap[e.white.0]);
        if removed_edges.contains(&id) {
            continue;
        }
        if let (Some(b), Some(w)) = (b, w) {
            let new = graph.add_edge(b, w, e.color)?;
            if g.is_marked(id) {
                graph.mark_edge(new)?;
            }
            edge_remap[k] = Some(new);
        }
    }
    let mut created = Vec::with_capacity(added.len());
    for &(u, v, c, marked) in added {
        let (a, b) = (extended[u.0], extended[v.0]);
        if a == usize::MAX || b == usize::MAX {
            return Err(MoveError::NotADipole(format!(
                "edge touches removed vertex {} or {}",
                u.0, v.0
            )));
        }
        let new = graph.add_edge(VertexId(a), VertexId(b), c)?;
        if marked {
            graph.mark_edge(new)?;
        }
        created.push(new);
    }
    Ok(Rebuilt {
        graph,
        vertex_remap,
        edge_remap,
        created,
    })
}

/// The graph with edges `e1` and `e2` of one color exchanged in place:
/// `(b1, w1), (b2, w2)` become `(b1, w2), (b2, w1)` at the same indices.
pub(crate) fn exchange(
    g: &ColoredGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<ColoredGraph, MoveError> {
    let (a, b) = (*g.edge(e1), *g.edge(e2));
    let sides: Vec<Side> = g.sides().to_vec();
    let mut h = ColoredGraph::new(g.dimension(), sides);
    // free the two slots first so that insertion order is irrelevant
    let mut edges: Vec<(VertexId, VertexId, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.black, e.white, e.color))
        .collect();
    edges[e1.0] = (a.black, b.white, a.color);
    edges[e2.0] = (b.black, a.white, a.color);
    for (k, &(x, y, c)) in edges.iter().enumerate() {
        let id = h.add_edge(x, y, c)?;
        debug_assert_eq!(id.0, k);
        if g.is_marked(EdgeId(k)) {
            h.mark_edge(id)?;
        }
    }
    Ok(h)
}

/// Colors joining `black` to `white`, among `colors`.
pub(crate) fn joining_colors(
    g: &ColoredGraph,
    black: VertexId,
    white: VertexId,
    colors: &[usize],
) -> Vec<usize> {
    colors
        .iter()
        .copied()
        .filter(|&c| g.neighbor(black, c) == Some(white))
        .collect()
}

/// Whether `u` and `v` lie in distinct components of the subgraph spanned by
/// `colors`.
pub(crate) fn separated(g: &ColoredGraph, u: VertexId, v: VertexId, colors: &[usize]) -> bool {
    let comps = g.components_with_colors(colors);
    let find = |x: VertexId| comps.iter().position(|c| c.binary_search(&x).is_ok());
    find(u) != find(v)
}

/// The component of `v` in the subgraph spanned by `colors`, as a graph on
/// the colors `0..colors.len()`.
pub(crate) fn component_graph(g: &ColoredGraph, v: VertexId, colors: &[usize]) -> ColoredGraph {
    let comp = g
        .components_with_colors(colors)
        .into_iter()
        .find(|c| c.binary_search(&v).is_ok())
        .expect("every vertex has a component");
    let mut drop = BTreeSet::new();
    for (k, e) in g.edges().iter().enumerate() {
        if !colors.contains(&e.color) {
            drop.insert(EdgeId(k));
        }
    }
    let sub = g.unmarked().without_edges(&drop).0.induced_subgraph(&comp);
    let mut map = vec![0; g.dimension() + 1];
    for (k, &c) in colors.iter().enumerate() {
        map[c] = k;
    }
    sub.relabel_colors(colors.len() - 1, &map)
        .expect("relabeling a regular component")
}

/// Whether a connected regular graph on the colors `0..=d` is certified to
/// represent the `d`-sphere.
///
/// With at most two colors every component is a sphere. With three colors
/// the surface is a sphere iff its only jacket is planar. With four colors a
/// planar jacket is a genus-0 Heegaard splitting, hence a 3-sphere. Beyond,
/// only degree 0 (all jackets planar, i.e. melonic) is accepted.
pub fn certified_sphere(g: &ColoredGraph) -> bool {
    let colors = g.color_range().len();
    if colors <= 2 {
        return g.is_connected();
    }
    match jackets(g) {
        Err(_) => false,
        Ok(list) if colors <= 4 => list.iter().any(|j| j.genus == 0),
        Ok(_) => gurau_degree(g).map(|d| d == 0.into()).unwrap_or(false),
    }
}

/// Whether one of the two sides of the dipole `(u, v)` is a certified
/// sphere, once the colors outside `complement` are deleted.
pub(crate) fn certified_proper(
    g: &ColoredGraph,
    u: VertexId,
    v: VertexId,
    complement: &[usize],
) -> bool {
    certified_sphere(&component_graph(g, u, complement))
        || certified_sphere(&component_graph(g, v, complement))
}

/// `Φ` and `Φ₀`, the latter zero without color-0 edges.
pub(crate) fn scores(g: &ColoredGraph) -> (i64, i64) {
    let phi0 = if g.colors_present().contains(&0) {
        zero_score(g)
    } else {
        0
    };
    (score(g) as i64, phi0 as i64)
}
