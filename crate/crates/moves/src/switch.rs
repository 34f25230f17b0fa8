//! Exchanges of two edges of the same color: flips and ρ-pair switchings.

use colgraph_core::{bicolored_cycles, ColoredGraph, EdgeId, VertexId};

use crate::error::MoveError;
use crate::rebuild::{certified_proper, exchange, joining_colors, scores, separated};
use crate::record::{Move, MoveKind, MoveRecord, TopologyFlag};

/// Number of colors `i ≠ c` for which the `(c, i)`-cycles through the black
/// ends of `e1` and `e2` differ. Marked edges count as absent.
pub fn separated_colors(g: &ColoredGraph, e1: EdgeId, e2: EdgeId) -> usize {
    let (a, b) = (g.edge(e1), g.edge(e2));
    let c = a.color;
    g.color_range()
        .into_iter()
        .filter(|&i| i != c)
        .filter(|&i| {
            let cycles = bicolored_cycles(g, c, i).expect("colors in range").cycles;
            !cycles
                .iter()
                .any(|cy| cy.contains(&a.black) && cy.contains(&b.black))
        })
        .count()
}

fn check_pair(g: &ColoredGraph, e1: EdgeId, e2: EdgeId) -> Result<usize, MoveError> {
    for e in [e1, e2] {
        if e.0 >= g.edge_count() {
            return Err(MoveError::Graph(colgraph_core::GraphError::UnknownEdge(
                e.0,
            )));
        }
    }
    if e1 == e2 {
        return Err(MoveError::SameEdge);
    }
    let (c1, c2) = (g.edge(e1).color, g.edge(e2).color);
    if c1 != c2 {
        return Err(MoveError::ColorsDiffer(c1, c2));
    }
    Ok(c1)
}

/// A dipole `(u, v)` with `1 ≤ h ≤ D − 1` such that `e1` and `e2` are
/// incident to `u` and `v` (one each), with its complementary colors.
fn flip_dipole(
    g: &ColoredGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Option<(VertexId, VertexId, Vec<usize>)> {
    let all = g.color_range();
    let d = all.len() - 1;
    let (a, b) = (g.edge(e1), g.edge(e2));
    [(a.black, b.white), (b.black, a.white)]
        .into_iter()
        .find_map(|(u, v)| {
            let joined = joining_colors(g, u, v, &all);
            if joined.is_empty() || joined.len() + 1 > d {
                return None;
            }
            let complement: Vec<usize> = all
                .iter()
                .copied()
                .filter(|c| !joined.contains(c))
                .collect();
            separated(g, u, v, &complement).then_some((u, v, complement))
        })
}

/// Flips two edges of the same color: exchanges them in place, keeping
/// bipartiteness. Either the input or the output configuration must have
/// the two edges incident to the two vertices of an `h`-dipole with
/// `1 ≤ h ≤ D − 1`, so that a flip and its inverse are both accepted.
pub fn flip(
    g: &ColoredGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    let c = check_pair(g, e1, e2)?;
    g.require_regular(&g.color_range())?;
    let h = exchange(g, e1, e2)?;
    let proper = if let Some((u, v, comp)) = flip_dipole(g, e1, e2) {
        certified_proper(g, u, v, &comp)
    } else if let Some((u, v, comp)) = flip_dipole(&h, e1, e2) {
        certified_proper(&h, u, v, &comp)
    } else {
        return Err(MoveError::NotIncidentToDipole);
    };
    let (before, after) = (scores(g), scores(&h));
    let record = MoveRecord {
        kind: MoveKind::Flip,
        vertices: Vec::new(),
        edges: vec![e1, e2],
        created: vec![e1, e2],
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: if proper {
            TopologyFlag::Preserved
        } else {
            TopologyFlag::Unknown
        },
        separated_colors: (c == 0).then(|| separated_colors(g, e1, e2)),
        vertex_remap: g.vertices().map(Some).collect(),
        edge_remap: (0..g.edge_count()).map(|k| Some(EdgeId(k))).collect(),
        inverse: Move::Flip(e1, e2),
    };
    Ok((h, record))
}

/// Exchanges two color-0 edges. `Φ₀` changes by `D − 2·𝓘₂` where `𝓘₂`
/// counts the colors whose `(0, i)`-cycles through the two edges differ.
/// A switch that disconnects a connected graph is flagged as a connected
/// sum.
pub fn rho_switch(
    g: &ColoredGraph,
    f1: EdgeId,
    f2: EdgeId,
) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    let c = check_pair(g, f1, f2)?;
    if c != 0 {
        return Err(MoveError::NotColorZero(if g.edge(f1).color != 0 {
            f1.0
        } else {
            f2.0
        }));
    }
    if let Some(m) = g.marked_edges().iter().next() {
        return Err(MoveError::Marked(m.0));
    }
    g.require_regular(&g.color_range())?;
    let h = exchange(g, f1, f2)?;
    let disconnects = g.is_connected() && !h.is_connected();
    let (before, after) = (scores(g), scores(&h));
    let record = MoveRecord {
        kind: MoveKind::RhoSwitch,
        vertices: Vec::new(),
        edges: vec![f1, f2],
        created: vec![f1, f2],
        delta_phi: after.0 - before.0,
        delta_phi0: after.1 - before.1,
        flag: if disconnects {
            TopologyFlag::ConnectedSum
        } else {
            TopologyFlag::Unknown
        },
        separated_colors: Some(separated_colors(g, f1, f2)),
        vertex_remap: g.vertices().map(Some).collect(),
        edge_remap: (0..g.edge_count()).map(|k| Some(EdgeId(k))).collect(),
        inverse: Move::RhoSwitch(f1, f2),
    };
    Ok((h, record))
}
