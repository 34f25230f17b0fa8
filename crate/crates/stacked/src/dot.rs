//! Graphviz export of stacked maps.

use std::fmt::Write;

use crate::map::StackedMap;

/// DOT text: white squares, colored square stars, black discs for color-0
/// stars and a cilium on every marked corner.
pub fn to_dot(map: &StackedMap) -> String {
    let mut out = String::from("graph stacked {\n");
    for l in 0..map.square_count() {
        let _ = writeln!(
            out,
            "  w{l} [shape=square, style=filled, fillcolor=white, label=\"{l}\"];"
        );
    }
    for c in 0..=map.dimension() {
        if map.leaf_color() == Some(c) {
            continue;
        }
        for (k, star) in map.stars(c).iter().enumerate() {
            let node = format!("s{c}_{k}");
            if c == 0 {
                let _ = writeln!(
                    out,
                    "  {node} [shape=circle, style=filled, fillcolor=black, label=\"\"];"
                );
            } else {
                let _ = writeln!(out, "  {node} [shape=square, label=\"{c}\"];");
            }
            for &l in star {
                let _ = writeln!(out, "  {node} -- w{l} [label=\"{c}\"];");
                if c == 0 && map.marked().contains(&l) {
                    let _ = writeln!(out, "  m{l} [shape=point];");
                    let _ = writeln!(out, "  {node} -- m{l} [style=dashed];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
