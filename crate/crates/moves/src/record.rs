//! Move descriptions and the record returned by every move.

use std::fmt;
use std::str::FromStr;

use colgraph_core::{ColoredGraph, EdgeId, VertexId};

use crate::dipole::{contract_color0_edge, dipole_contract, dipole_insert};
use crate::error::MoveError;
use crate::sum::{connected_split, join_components};
use crate::switch::{flip, rho_switch};

/// The kind of a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    DipoleContract,
    DipoleInsert,
    Flip,
    RhoSwitch,
    ConnectedSum,
    ConnectedSplit,
    Color0Contract,
}

/// What is known about the topology after a move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopologyFlag {
    /// Certified unchanged.
    Preserved,
    /// The two sides are related by a connected sum.
    ConnectedSum,
    /// Nothing is certified.
    Unknown,
}

impl fmt::Display for TopologyFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopologyFlag::Preserved => "preserved",
            TopologyFlag::ConnectedSum => "connected-sum",
            TopologyFlag::Unknown => "unknown",
        })
    }
}

/// A move on a single graph, addressed by vertex and edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Contract the dipole `(black, white)` joined by `colors`.
    DipoleContract {
        black: VertexId,
        white: VertexId,
        colors: Vec<usize>,
    },
    /// Insert a dipole joined by `colors` on one edge of each other color.
    DipoleInsert {
        colors: Vec<usize>,
        edges: Vec<EdgeId>,
    },
    Flip(EdgeId, EdgeId),
    RhoSwitch(EdgeId, EdgeId),
    /// Contract a color-0 edge between two bubbles.
    Color0Contract(EdgeId),
    /// Connected sum of two vertices of opposite sides in distinct
    /// components.
    Join(VertexId, VertexId),
    /// Inverse of [`Move::Join`]: cut one edge of each color.
    Split(Vec<EdgeId>),
}

/// Outcome of a move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    /// Affected vertices, in the input indexing.
    pub vertices: Vec<VertexId>,
    /// Affected edges, in the input indexing.
    pub edges: Vec<EdgeId>,
    /// Edges created by the move, in the output indexing.
    pub created: Vec<EdgeId>,
    pub delta_phi: i64,
    pub delta_phi0: i64,
    pub flag: TopologyFlag,
    /// For color-0 exchanges, the number of colors `i` whose `(0, i)`-cycles
    /// through the two edges are distinct.
    pub separated_colors: Option<usize>,
    /// New index of every input vertex.
    pub vertex_remap: Vec<Option<VertexId>>,
    /// New index of every input edge.
    pub edge_remap: Vec<Option<EdgeId>>,
    /// The move undoing this one on the output graph.
    pub inverse: Move,
}

/// Applies a move.
pub fn apply(g: &ColoredGraph, mv: &Move) -> Result<(ColoredGraph, MoveRecord), MoveError> {
    match mv {
        Move::DipoleContract {
            black,
            white,
            colors,
        } => dipole_contract(g, *black, *white, colors),
        Move::DipoleInsert { colors, edges } => dipole_insert(g, colors, edges),
        Move::Flip(a, b) => flip(g, *a, *b),
        Move::RhoSwitch(a, b) => rho_switch(g, *a, *b),
        Move::Color0Contract(e) => contract_color0_edge(g, *e),
        Move::Join(u, v) => join_components(g, *u, *v),
        Move::Split(edges) => connected_split(g, edges),
    }
}

fn join_list(items: impl Iterator<Item = usize>) -> String {
    items.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::DipoleContract {
                black,
                white,
                colors,
            } => write!(
                f,
                "contract {} {} {}",
                black.0,
                white.0,
                join_list(colors.iter().copied())
            ),
            Move::DipoleInsert { colors, edges } => write!(
                f,
                "insert {} {}",
                join_list(colors.iter().copied()),
                join_list(edges.iter().map(|e| e.0))
            ),
            Move::Flip(a, b) => write!(f, "flip {} {}", a.0, b.0),
            Move::RhoSwitch(a, b) => write!(f, "switch {} {}", a.0, b.0),
            Move::Color0Contract(e) => write!(f, "contract0 {}", e.0),
            Move::Join(u, v) => write!(f, "join {} {}", u.0, v.0),
            Move::Split(edges) => write!(f, "split {}", join_list(edges.iter().map(|e| e.0))),
        }
    }
}

fn number(s: &str) -> Result<usize, MoveError> {
    s.parse()
        .map_err(|_| MoveError::Parse(format!("not an index: {s}")))
}

fn list(s: &str) -> Result<Vec<usize>, MoveError> {
    s.split(',').map(number).collect()
}

impl FromStr for Move {
    type Err = MoveError;

    /// Parses the forms written by [`Display`](fmt::Display), e.g.
    /// `contract 0 3 1,2` or `switch 4 7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let arity = |k: usize| {
            if words.len() == k + 1 {
                Ok(())
            } else {
                Err(MoveError::Parse(format!(
                    "`{}` expects {k} arguments",
                    words[0]
                )))
            }
        };
        let Some(&head) = words.first() else {
            return Err(MoveError::Parse("empty line".into()));
        };
        match head {
            "contract" => {
                arity(3)?;
                Ok(Move::DipoleContract {
                    black: VertexId(number(words[1])?),
                    white: VertexId(number(words[2])?),
                    colors: list(words[3])?,
                })
            }
            "insert" => {
                arity(2)?;
                Ok(Move::DipoleInsert {
                    colors: list(words[1])?,
                    edges: list(words[2])?.into_iter().map(EdgeId).collect(),
                })
            }
            "flip" => {
                arity(2)?;
                Ok(Move::Flip(
                    EdgeId(number(words[1])?),
                    EdgeId(number(words[2])?),
                ))
            }
            "switch" => {
                arity(2)?;
                Ok(Move::RhoSwitch(
                    EdgeId(number(words[1])?),
                    EdgeId(number(words[2])?),
                ))
            }
            "contract0" => {
                arity(1)?;
                Ok(Move::Color0Contract(EdgeId(number(words[1])?)))
            }
            "join" => {
                arity(2)?;
                Ok(Move::Join(
                    VertexId(number(words[1])?),
                    VertexId(number(words[2])?),
                ))
            }
            "split" => {
                arity(1)?;
                Ok(Move::Split(
                    list(words[1])?.into_iter().map(EdgeId).collect(),
                ))
            }
            other => Err(MoveError::Parse(format!("unknown move `{other}`"))),
        }
    }
}
