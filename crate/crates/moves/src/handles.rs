//! Detection of combinatorial handles.

use colgraph_core::{bicolored_cycles, ColoredGraph, VertexId};

use crate::error::MoveError;
use crate::rebuild::joining_colors;

/// A pair joined by all colors but two, whose four remaining edges lie on a
/// single bicolored cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Handle {
    pub black: VertexId,
    pub white: VertexId,
    /// The two colors not joining the pair, in increasing order.
    pub colors: (usize, usize),
}

/// All combinatorial handles of a regular graph, ordered by black vertex.
pub fn find_handles(g: &ColoredGraph) -> Result<Vec<Handle>, MoveError> {
    let all = g.color_range();
    g.require_regular(&all)?;
    let mut out = Vec::new();
    if all.len() < 3 {
        return Ok(out);
    }
    for black in g.blacks() {
        let mut whites: Vec<VertexId> = all.iter().filter_map(|&c| g.neighbor(black, c)).collect();
        whites.sort_unstable();
        whites.dedup();
        for white in whites {
            let joined = joining_colors(g, black, white, &all);
            if joined.len() + 2 != all.len() {
                continue;
            }
            let free: Vec<usize> = all
                .iter()
                .copied()
                .filter(|c| !joined.contains(c))
                .collect();
            let (i, j) = (free[0], free[1]);
            let cycles = bicolored_cycles(&g.unmarked(), i, j)?.cycles;
            if cycles
                .iter()
                .any(|cy| cy.contains(&black) && cy.contains(&white))
            {
                out.push(Handle {
                    black,
                    white,
                    colors: (i, j),
                });
            }
        }
    }
    Ok(out)
}
