//! Canonical forms of colored graphs.
//!
//! Vertex classes are refined from local data until stable. In a properly
//! edge-colored connected graph, fixing one start vertex determines a
//! breadth-first labeling that visits colors in increasing order, so the
//! least code over the start vertices of the smallest class is a complete
//! invariant. Components are coded separately and sorted.

use std::collections::BTreeMap;

use crate::graph::{ColoredGraph, Side, VertexId};

const NONE: u32 = u32::MAX;

/// Iterated color refinement restricted to the vertices of one component.
fn refine(g: &ColoredGraph, comp: &[VertexId], local: &[usize]) -> Vec<usize> {
    let d = g.dimension();
    let mut class: Vec<usize> = comp
        .iter()
        .map(|&v| {
            let mut sig = usize::from(g.side(v) == Side::White);
            for c in 0..=d {
                let bit = match g.edge_at(v, c) {
                    None => 0,
                    Some(e) if g.is_marked(e) => 2,
                    Some(_) => 1,
                };
                sig = sig * 3 + bit;
            }
            sig
        })
        .collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = comp
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let around = (0..=d)
                    .map(|c| g.neighbor(v, c).map_or(usize::MAX, |u| class[local[u.0]]))
                    .collect();
                (class[k], around)
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        // renumber by sorted signature so the result is label independent
        let order: BTreeMap<&(usize, Vec<usize>), usize> =
            ids.keys().enumerate().map(|(i, &k)| (k, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| order[s]).collect();
        let distinct_before = {
            let mut c = class.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        class = next;
        if order.len() == distinct_before {
            return class;
        }
    }
}

fn code_from(g: &ColoredGraph, start: VertexId) -> Vec<u32> {
    let d = g.dimension();
    let mut label: BTreeMap<usize, u32> = BTreeMap::new();
    let mut queue = vec![start];
    label.insert(start.0, 0);
    let mut code = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        code.push(u32::from(g.side(v) == Side::White));
        for c in 0..=d {
            match g.edge_at(v, c) {
                None => code.push(NONE),
                Some(e) => {
                    let u = g.edge(e).other(v);
                    let next = label.len() as u32;
                    let l = *label.entry(u.0).or_insert_with(|| {
                        queue.push(u);
                        next
                    });
                    code.push(l);
                    code.push(u32::from(g.is_marked(e)));
                }
            }
        }
    }
    code
}

fn component_code(g: &ColoredGraph, comp: &[VertexId]) -> Vec<u32> {
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (k, v) in comp.iter().enumerate() {
        local[v.0] = k;
    }
    let class = refine(g, comp, &local);
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &class {
        *sizes.entry(c).or_default() += 1;
    }
    let target = sizes
        .iter()
        .min_by_key(|&(c, n)| (*n, *c))
        .map(|(c, _)| *c)
        .expect("non-empty component");
    comp.iter()
        .zip(&class)
        .filter(|(_, &c)| c == target)
        .map(|(&v, _)| code_from(g, v))
        .min()
        .expect("non-empty class")
}

/// A string that is equal for two graphs iff they are isomorphic as
/// vertex-bicolored, edge-colored multigraphs with marked edges.
pub fn canonical_form(g: &ColoredGraph) -> String {
    let mut codes: Vec<Vec<u32>> = g
        .connected_components()
        .iter()
        .map(|comp| component_code(g, comp))
        .collect();
    codes.sort();
    let mut out = format!("D{}", g.dimension());
    for code in codes {
        out.push('|');
        let parts: Vec<String> = code
            .iter()
            .map(|&x| {
                if x == NONE {
                    "-".to_string()
                } else {
                    x.to_string()
                }
            })
            .collect();
        out.push_str(&parts.join("."));
    }
    out
}
