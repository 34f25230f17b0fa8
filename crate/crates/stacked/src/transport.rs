//! Transport of per-type bubble pairings to every bubble of a gluing.

use std::collections::VecDeque;

use colgraph_core::{ColoredGraph, VertexId};
use colgraph_pairings::Pairing;

use crate::error::StackedError;

/// An isomorphism from the bubble `a` onto the component of `b` containing
/// `b_start`, sending `a_start` to `b_start`, using colors `1..=D`. Returns
/// the image of every vertex of `a`.
pub fn bubble_isomorphism(
    a: &ColoredGraph,
    a_start: VertexId,
    b: &ColoredGraph,
    b_start: VertexId,
) -> Option<Vec<VertexId>> {
    if a.side(a_start) != b.side(b_start) || a.dimension() != b.dimension() {
        return None;
    }
    let mut image = vec![None; a.vertex_count()];
    let mut used = vec![false; b.vertex_count()];
    image[a_start.0] = Some(b_start);
    used[b_start.0] = true;
    let mut queue = VecDeque::from([a_start]);
    while let Some(x) = queue.pop_front() {
        let fx = image[x.0].expect("visited");
        for c in 1..=a.dimension() {
            match (a.neighbor(x, c), b.neighbor(fx, c)) {
                (None, None) => {}
                (Some(y), Some(fy)) => match image[y.0] {
                    Some(prev) if prev != fy => return None,
                    Some(_) => {}
                    None => {
                        if std::mem::replace(&mut used[fy.0], true) {
                            return None;
                        }
                        image[y.0] = Some(fy);
                        queue.push_back(y);
                    }
                },
                _ => return None,
            }
        }
    }
    image.into_iter().collect()
}

/// Pairing of a gluing obtained by copying, into each of its bubbles, the
/// pairing of the first matching bubble type. The first isomorphism found
/// is used, so bubbles with automorphisms get a deterministic choice.
pub fn transport_pairings(
    g: &ColoredGraph,
    types: &[(ColoredGraph, Pairing)],
) -> Result<Pairing, StackedError> {
    let colors: Vec<usize> = (1..=g.dimension()).collect();
    let mut pairs = Vec::new();
    'components: for comp in g.components_with_colors(&colors) {
        for (bubble, omega) in types {
            if bubble.vertex_count() != comp.len() || bubble.vertex_count() == 0 {
                continue;
            }
            let a_start = bubble.blacks().next().expect("nonempty bubble");
            for &v in &comp {
                if let Some(image) = bubble_isomorphism(bubble, a_start, g, v) {
                    pairs.extend(omega.pairs().iter().map(|&(x, y)| (image[x.0], image[y.0])));
                    continue 'components;
                }
            }
        }
        return Err(StackedError::UnknownBubble);
    }
    Ok(Pairing::new(g, &pairs)?)
}
