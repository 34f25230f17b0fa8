//! Dipole contraction and insertion, and color-0 edge contraction.

use std::collections::BTreeSet;

use colgraph_core::{ColoredGraph, EdgeId, Side, VertexId};

use crate::error::MoveError;
use crate::rebuild::{certified_proper, joining_colors, rebuild, scores, separated, NewEdge};
use crate::record::{Move, MoveKind, MoveRecord, TopologyFlag};

fn flag(proper: bool) -> TopologyFlag {
    if proper {
        TopologyFlag::Preserved
    } else {
        TopologyFlag::Unknown
    }
}

/// Checks that `(black, white)` is a dipole joined by exactly `colors` and
/// returns the complementary colors.
fn check_dipole(
    g: &ColoredGraph,
    black: VertexId,
    white: VertexId,
    colors: &[usize],
) -> Result<Vec<usize>, MoveError> {
    for v in [black, white] {
        if v.0 >= g.vertex_count() {
            return Err(MoveError::Graph(colgraph_core::GraphError::UnknownVertex(
                v.0,
            )));
        }
    }
    if g.side(black) != Side::Black || g.side(white) != Side::White {
        return Err(MoveError::NotADipole(
            "expected a black then a white vertex".into(),
        ));
    }
    let all = g.color_range();
    g.require_regular(&all)?;
    let joined = joining_colors(g, black, white, &all);
    let mut asked = colors.to_vec();
    asked.sort_unstable();
    asked.dedup();
    if joined != asked {
        return Err(MoveError::ColorMismatch(format!(
            "vertices are joined by colors {joined:?}, not {asked:?}"
        )));
    }
    if joined.is_empty() {
        return Err(MoveError::NotADipole("vertices are not adjacent".into()));
    }
    let complement: Vec<usize> = all
        .iter()
        .copied()
        .filter(|c| !joined.contains(c))
        .collect();
    if complement.is_empty() {
        return Err(MoveError::NotADipole(
            "the pair is a whole component".into(),
        ));
    }
    if !separated(g, black, white, &complement) {
        return Err(MoveError::NotADipole(format!(
            "vertices stay connected by colors {complement:?}"
        )));
    }
    Ok(complement)
}

/// Contracts the dipole `(black, white)` joined by exactly `colors`: both
/// vertices are removed and, for every other color `c`, the `c`-neighbors
/// are joined by a new edge of color `c`.
///
/// The flag is `Preserved` when one side of the dipole is a certified sphere.
pub fn dipole_contract(
    g: &ColoredGraph,
    black: VertexId,
    white: VertexId,
    colors: &[usize],
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    let complement = check_dipole(g, black, white, colors)?;
    let proper = certified_proper(g, black, white, &complement);
    let mut touched = BTreeSet::new();
    let mut added: Vec<NewEdge> = Vec::new();
    for c in g.color_range() {
        let (eb, ew) = (
            g.edge_at(black, c).expect("regular"),
            g.edge_at(white, c).expect("regular"),
        );
        touched.insert(eb);
        touched.insert(ew);
        if complement.contains(&c) {
            let x = g.neighbor(white, c).expect("regular");
            let y = g.neighbor(black, c).expect("regular");
            added.push((x, y, c, g.is_marked(eb) || g.is_marked(ew)));
        }
    }
    let out = rebuild(g, &[black, white], &touched, &[], &added)?;
    let (before, after) = (scores(g), scores(&out.graph));
    let joined: Vec<usize> = g
        .color_range()
        .into_iter()
        .filter(|c| !complement.contains(c))
        .collect();
    let record = MoveRecord {
        kind: MoveKind::DipoleContract,
        vertices: vec![black, white],
        edges: touched.into_iter().collect(),
        created: out.created.clone(),
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: flag(proper),
        separated_colors: None,
        vertex_remap: out.vertex_remap,
        edge_remap: out.edge_remap,
        inverse: Move::DipoleInsert {
            colors: joined,
            edges: out.created,
        },
    };
    Ok((out.graph, record))
}

/// Inserts a dipole joined by `colors`, cutting `edges`, one of each other
/// color. An edge `(x, y)` of color `c` becomes `(u, y)` and `(x, v)` where
/// `u` (black) and `v` (white) are the new vertices, appended last.
///
/// The edges must lie in one component of the subgraph of the other colors
/// and the new pair must be a dipole.
pub fn dipole_insert(
    g: &ColoredGraph,
    colors: &[usize],
    edges: &[EdgeId],
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    let all = g.color_range();
    g.require_regular(&all)?;
    let mut joined = colors.to_vec();
    joined.sort_unstable();
    joined.dedup();
    if joined.is_empty() || joined.iter().any(|c| !all.contains(c)) {
        return Err(MoveError::ColorMismatch(format!(
            "colors {colors:?} are not a nonempty subset of {all:?}"
        )));
    }
    let complement: Vec<usize> = all
        .iter()
        .copied()
        .filter(|c| !joined.contains(c))
        .collect();
    for e in edges {
        if e.0 >= g.edge_count() {
            return Err(MoveError::Graph(colgraph_core::GraphError::UnknownEdge(
                e.0,
            )));
        }
    }
    let mut edge_colors: Vec<usize> = edges.iter().map(|&e| g.edge(e).color).collect();
    edge_colors.sort_unstable();
    if complement.is_empty() || edge_colors != complement {
        return Err(MoveError::ColorMismatch(format!(
            "need one edge of each color {complement:?}, got colors {edge_colors:?}"
        )));
    }
    let comps = g.components_with_colors(&complement);
    let comp_of = |v: VertexId| comps.iter().position(|c| c.binary_search(&v).is_ok());
    let first = comp_of(g.edge(edges[0]).black);
    if edges.iter().any(|&e| comp_of(g.edge(e).black) != first) {
        return Err(MoveError::NotInsertable(
            "edges lie in several components of the other colors".into(),
        ));
    }
    let n = g.vertex_count();
    let (u, v) = (VertexId(n), VertexId(n + 1));
    let mut added: Vec<NewEdge> = joined.iter().map(|&c| (u, v, c, false)).collect();
    for &e in edges {
        let edge = g.edge(e);
        added.push((u, edge.white, edge.color, g.is_marked(e)));
        added.push((edge.black, v, edge.color, g.is_marked(e)));
    }
    let removed: BTreeSet<EdgeId> = edges.iter().copied().collect();
    let out = rebuild(g, &[], &removed, &[Side::Black, Side::White], &added)?;
    let (nu, nv) = (VertexId(n), VertexId(n + 1));
    if !separated(&out.graph, nu, nv, &complement) {
        return Err(MoveError::NotInsertable(
            "the new pair would not be a dipole".into(),
        ));
    }
    let proper = certified_proper(&out.graph, nu, nv, &complement);
    let (before, after) = (scores(g), scores(&out.graph));
    let record = MoveRecord {
        kind: MoveKind::DipoleInsert,
        vertices: Vec::new(),
        edges: edges.to_vec(),
        created: out.created.clone(),
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: flag(proper),
        separated_colors: None,
        vertex_remap: out.vertex_remap,
        edge_remap: out.edge_remap,
        inverse: Move::DipoleContract {
            black: nu,
            white: nv,
            colors: joined,
        },
    };
    Ok((out.graph, record))
}

/// Contracts a color-0 edge between two distinct bubbles, fusing them. This
/// is the contraction of a 1-dipole and keeps `Φ₀`.
pub fn contract_color0_edge(
    g: &ColoredGraph,
    e: EdgeId,
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    if e.0 >= g.edge_count() {
        return Err(MoveError::Graph(colgraph_core::GraphError::UnknownEdge(
            e.0,
        )));
    }
    let edge = *g.edge(e);
    if edge.color != 0 {
        return Err(MoveError::NotColorZero(e.0));
    }
    let bubble_colors: Vec<usize> = (1..=g.dimension()).collect();
    if !separated(g, edge.black, edge.white, &bubble_colors) {
        return Err(MoveError::InternalEdge(e.0));
    }
    let (h, mut record) = dipole_contract(g, edge.black, edge.white, &[0])?;
    record.kind = MoveKind::Color0Contract;
    Ok((h, record))
}
