//! Pruning of stacked maps and their collapse to schemes.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::SykError;
use crate::gf::ChainKind;
use crate::map::SykMap;

/// A vertex of a pruned map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKind {
    /// A white square, with its index in the original map.
    White(usize),
    /// A colored vertex of the given color.
    Colored(usize),
}

impl NodeKind {
    pub fn is_white(self) -> bool {
        matches!(self, NodeKind::White(_))
    }
}

/// An edge between a white square and a colored vertex of its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapEdge {
    pub white: usize,
    pub colored: usize,
    pub color: usize,
}

/// A stacked map as a bipartite graph with rotations, possibly with
/// vertices and edges removed by pruning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedMap {
    pub nodes: Vec<NodeKind>,
    pub edges: Vec<MapEdge>,
    /// Cyclic order of the live edges around each live node.
    pub rotation: Vec<Vec<usize>>,
    pub alive: Vec<bool>,
    pub edge_alive: Vec<bool>,
    /// Marked nodes, in the order of the marks.
    pub marked: Vec<usize>,
}

impl PrunedMap {
    /// The full bipartite map: squares first, then colored vertices by color.
    pub fn from_map(map: &SykMap) -> Self {
        let k = map.square_count();
        let mut nodes: Vec<NodeKind> = (0..k).map(NodeKind::White).collect();
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut edges = Vec::new();
        let mut vertex_of = BTreeMap::new();
        for c in 1..=map.dimension() {
            for cycle in map.colored_vertices(c) {
                let node = nodes.len();
                nodes.push(NodeKind::Colored(c));
                vertex_of.insert((c, cycle[0]), node);
                let mut around = Vec::with_capacity(cycle.len());
                for &l in &cycle {
                    around.push(edges.len());
                    edges.push(MapEdge {
                        white: l,
                        colored: node,
                        color: c,
                    });
                }
                rotation.push(around);
            }
        }
        for (e, edge) in edges.iter().enumerate() {
            rotation[edge.white].push(e);
        }
        for r in rotation.iter_mut().take(k) {
            r.sort_by_key(|&e| edges[e].color);
        }
        let marked = map
            .marks()
            .iter()
            .map(|&m| vertex_of[&map.colored_vertex(m)])
            .collect();
        PrunedMap {
            alive: vec![true; nodes.len()],
            edge_alive: vec![true; edges.len()],
            nodes,
            edges,
            rotation,
            marked,
        }
    }

    pub fn degree(&self, node: usize) -> usize {
        self.rotation[node].len()
    }

    pub fn is_marked(&self, node: usize) -> bool {
        self.marked.contains(&node)
    }

    pub fn live_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&v| self.alive[v])
    }

    pub fn live_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edge_alive[e])
    }

    fn other(&self, e: usize, v: usize) -> usize {
        let edge = self.edges[e];
        if edge.white == v {
            edge.colored
        } else {
            edge.white
        }
    }

    fn components(&self) -> usize {
        let mut seen = vec![false; self.nodes.len()];
        let mut count = 0;
        for start in self.live_nodes() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &e in &self.rotation[v] {
                    let u = self.other(e, v);
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    /// Circuit rank `E − V + K` of the live part.
    pub fn circuit_rank(&self) -> usize {
        self.live_edges().count() + self.components() - self.live_nodes().count()
    }
}

/// Recursively deletes unmarked leaves with their edge.
pub fn prune(map: &SykMap) -> PrunedMap {
    let mut p = PrunedMap::from_map(map);
    let mut stack: Vec<usize> = p
        .live_nodes()
        .filter(|&v| p.degree(v) == 1 && !p.is_marked(v))
        .collect();
    while let Some(v) = stack.pop() {
        if !p.alive[v] || p.degree(v) != 1 {
            continue;
        }
        let e = p.rotation[v][0];
        let u = p.other(e, v);
        p.alive[v] = false;
        p.edge_alive[e] = false;
        p.rotation[v].clear();
        p.rotation[u].retain(|&x| x != e);
        if p.degree(u) == 1 && !p.is_marked(u) {
            stack.push(u);
        }
    }
    p
}

/// A vertex of a scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SchemeNode {
    pub kind: NodeKind,
    pub marked: bool,
    pub degree: usize,
}

/// A chain-edge: a maximal sequence of unmarked degree-two vertices between
/// two scheme vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainEdge {
    pub ends: (usize, usize),
    /// Colors of the first and last map edges.
    pub end_colors: (usize, usize),
    pub whites: usize,
    pub colored: usize,
    pub kind: ChainKind,
}

impl ChainEdge {
    /// A chain with no inner vertex: a single map edge.
    pub fn is_plain(&self) -> bool {
        self.whites == 0 && self.colored == 0
    }
}

/// A pruned map with its degree-two chains collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    pub nodes: Vec<SchemeNode>,
    pub edges: Vec<ChainEdge>,
}

/// Collapses the chains of a pruned map. The map must carry a mark.
pub fn to_scheme(p: &PrunedMap) -> Result<Scheme, SykError> {
    if p.marked.is_empty() {
        return Err(SykError::Unrooted);
    }
    let branch: Vec<usize> = p
        .live_nodes()
        .filter(|&v| p.is_marked(v) || p.degree(v) != 2)
        .collect();
    let mut index = BTreeMap::new();
    let mut nodes = Vec::new();
    for &v in &branch {
        index.insert(v, nodes.len());
        nodes.push(SchemeNode {
            kind: p.nodes[v],
            marked: p.is_marked(v),
            degree: p.degree(v),
        });
    }
    let mut used = vec![false; p.edges.len()];
    let mut edges = Vec::new();
    for &start in &branch {
        for &first in &p.rotation[start] {
            if used[first] {
                continue;
            }
            used[first] = true;
            let (mut whites, mut colored) = (0, 0);
            let mut e = first;
            let mut v = p.other(e, start);
            while !index.contains_key(&v) {
                match p.nodes[v] {
                    NodeKind::White(_) => whites += 1,
                    NodeKind::Colored(_) => colored += 1,
                }
                let next = *p.rotation[v].iter().find(|&&x| x != e).expect("degree two");
                used[next] = true;
                e = next;
                v = p.other(e, v);
            }
            let end_colors = (p.edges[first].color, p.edges[e].color);
            edges.push(ChainEdge {
                ends: (index[&start], index[&v]),
                end_colors,
                whites,
                colored,
                kind: ChainKind::from_ends(
                    p.nodes[start].is_white(),
                    p.nodes[v].is_white(),
                    end_colors.0,
                    end_colors.1,
                ),
            });
        }
    }
    Ok(Scheme { nodes, edges })
}

/// Shapes of rooted next-to-leading two-point schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NloShape {
    /// The root lies on the cycle.
    RootOnCycle,
    /// The cycle hangs from a white square of valency three.
    WhiteBranch,
    /// The cycle hangs from a colored vertex of the root's color.
    ColoredBranchSame,
    /// The cycle hangs from a colored vertex of another color.
    ColoredBranchOther,
}

impl fmt::Display for NloShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NloShape::RootOnCycle => "root-on-cycle",
            NloShape::WhiteBranch => "white-branch",
            NloShape::ColoredBranchSame => "colored-branch-same",
            NloShape::ColoredBranchOther => "colored-branch-other",
        })
    }
}

impl Scheme {
    /// Circuit rank `E − V + 1` of the connected scheme.
    pub fn circuit_rank(&self) -> usize {
        self.edges.len() + 1 - self.nodes.len()
    }

    pub fn marked_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.marked).count()
    }

    /// The shape of a scheme with one mark and one independent cycle.
    pub fn nlo_two_point_shape(&self) -> Option<NloShape> {
        if self.marked_count() != 1 || self.circuit_rank() != 1 {
            return None;
        }
        let root = self.nodes.iter().position(|n| n.marked)?;
        if self.nodes.len() == 1 {
            return Some(NloShape::RootOnCycle);
        }
        let other = self.nodes.iter().position(|n| !n.marked)?;
        match (self.nodes[root].kind, self.nodes[other].kind) {
            (_, NodeKind::White(_)) => Some(NloShape::WhiteBranch),
            (NodeKind::Colored(a), NodeKind::Colored(b)) if a == b => {
                Some(NloShape::ColoredBranchSame)
            }
            _ => Some(NloShape::ColoredBranchOther),
        }
    }

    /// A description independent of vertex numbering, used to group
    /// contributions: sorted vertex types and sorted chain kinds.
    pub fn signature(&self) -> String {
        let mut nodes: Vec<String> = self
            .nodes
            .iter()
            .map(|n| {
                let t = if n.kind.is_white() { "w" } else { "c" };
                format!("{t}{}{}", n.degree, if n.marked { "*" } else { "" })
            })
            .collect();
        nodes.sort();
        let mut edges: Vec<&str> = self.edges.iter().map(|e| e.kind.symbol()).collect();
        edges.sort();
        format!("{} | {}", nodes.join(" "), edges.join(" "))
    }
}
