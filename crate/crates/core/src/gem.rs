//! The `.gem` text format and DOT export.
//!
//! ```text
//! gem D=3 V=2
//! # optional vertex lines; by default even indices are white
//! v 0 white
//! v 1 black
//! e 0 1 0
//! root 0
//! ```
//!
//! `e <u> <w> <color>` adds an edge, `root <edge-index>` marks a color-0 edge.

use std::fmt::Write as _;

use crate::error::{GraphError, ParseError};
use crate::graph::{ColoredGraph, EdgeId, Side, VertexId};

enum Item {
    Edge(usize, usize, usize),
    Root(usize),
}

fn malformed(line: usize, text: &str) -> ParseError {
    ParseError::Malformed {
        line,
        text: text.to_string(),
    }
}

fn header_field(token: &str, key: &str) -> Option<usize> {
    token.strip_prefix(key)?.strip_prefix('=')?.parse().ok()
}

/// Parses `.gem` content into a graph.
pub fn parse(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "gem" {
        return Err(ParseError::MissingHeader);
    }
    let d = header_field(tokens[1], "D").ok_or(ParseError::MissingHeader)?;
    let n = header_field(tokens[2], "V").ok_or(ParseError::MissingHeader)?;

    let mut sides: Vec<Side> = (0..n)
        .map(|i| if i % 2 == 0 { Side::White } else { Side::Black })
        .collect();
    let mut items = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| malformed(line, text));
        match tokens.as_slice() {
            ["v", idx, side] => {
                let idx = num(idx)?;
                let side = match *side {
                    "black" => Side::Black,
                    "white" => Side::White,
                    _ => return Err(malformed(line, text)),
                };
                *sides.get_mut(idx).ok_or(ParseError::Graph {
                    line,
                    source: GraphError::UnknownVertex(idx),
                })? = side;
            }
            ["e", u, w, c] => items.push((line, Item::Edge(num(u)?, num(w)?, num(c)?))),
            ["root", e] => items.push((line, Item::Root(num(e)?))),
            _ => return Err(malformed(line, text)),
        }
    }
    let mut g = ColoredGraph::new(d, sides);
    for (line, item) in items {
        let result = match item {
            Item::Edge(u, w, c) => g.add_edge(VertexId(u), VertexId(w), c).map(|_| ()),
            Item::Root(e) => g.mark_edge(EdgeId(e)),
        };
        result.map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(g)
}

/// Serializes a graph; [`parse`] of the output reproduces it exactly.
pub fn serialize(g: &ColoredGraph) -> String {
    let mut out = format!("gem D={} V={}\n", g.dimension(), g.vertex_count());
    for v in g.vertices() {
        let side = match g.side(v) {
            Side::Black => "black",
            Side::White => "white",
        };
        let _ = writeln!(out, "v {} {}", v.0, side);
    }
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.black.0, e.white.0, e.color);
    }
    for m in g.marked_edges() {
        let _ = writeln!(out, "root {}", m.0);
    }
    out
}

const PALETTE: [&str; 8] = [
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
];

/// DOT rendering: one color per edge color, dashed color-0 edges, filled
/// black vertices and hollow white vertices.
pub fn to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let style = match g.side(v) {
            Side::Black => "shape=circle, style=filled, fillcolor=black, fontcolor=white",
            Side::White => "shape=circle, style=solid",
        };
        let _ = writeln!(out, "  v{} [{}];", v.0, style);
    }
    for (k, e) in g.edges().iter().enumerate() {
        let color = PALETTE[e.color % PALETTE.len()];
        let dash = if e.color == 0 { ", style=dashed" } else { "" };
        let bold = if g.is_marked(EdgeId(k)) {
            ", penwidth=3"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  v{} -- v{} [color={}, label=\"{}\"{}{}];",
            e.black.0, e.white.0, color, e.color, dash, bold
        );
    }
    out.push_str("}\n");
    out
}
