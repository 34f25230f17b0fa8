//! Boundary graphs of graphs with missing color-0 edges.

use crate::error::GraphError;
use crate::graph::{ColoredGraph, Side, VertexId};

/// The boundary graph together with the original index of each boundary
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    pub graph: ColoredGraph,
    pub origin: Vec<VertexId>,
}

/// The boundary graph of `g`, whose marked edges count as missing.
///
/// Its vertices are the vertices of `g` without a live color-0 edge, and
/// each maximal path alternating colors `i` and `0` between two of them
/// becomes a color-`i` edge. A closed graph has an empty boundary.
pub fn boundary_graph(g: &ColoredGraph) -> Result<Boundary, GraphError> {
    let d = g.dimension();
    let colors: Vec<usize> = (1..=d).collect();
    for v in g.vertices() {
        for &c in &colors {
            if g.edge_at(v, c).is_none() {
                return Err(GraphError::NotRegular(format!(
                    "vertex {} misses color {}",
                    v.0, c
                )));
            }
        }
    }
    let open: Vec<VertexId> = g
        .vertices()
        .filter(|&v| g.live_edge_at(v, 0).is_none())
        .collect();
    let black = open.iter().filter(|&&v| g.side(v) == Side::Black).count();
    let white = open.len() - black;
    if black != white {
        return Err(GraphError::Unbalanced { black, white });
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (k, v) in open.iter().enumerate() {
        index[v.0] = k;
    }
    let sides = open.iter().map(|&v| g.side(v)).collect();
    let mut out = ColoredGraph::new(d, sides);
    for &c in &colors {
        for &start in open.iter().filter(|&&v| g.side(v) == Side::Black) {
            let mut v = start;
            let end = loop {
                let w = g.neighbor(v, c).expect("regular colors");
                match g.live_neighbor(w, 0) {
                    None => break w,
                    Some(b) => v = b,
                }
            };
            out.add_edge(VertexId(index[start.0]), VertexId(index[end.0]), c)?;
        }
    }
    Ok(Boundary {
        graph: out,
        origin: open,
    })
}
