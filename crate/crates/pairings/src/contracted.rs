//! The graph obtained by contracting every pair of a pairing, and its
//! number of independent polychromatic cycles `L_m`.

use colgraph_core::map::cycle_count;
use colgraph_core::ColoredGraph;

use crate::error::PairingError;
use crate::pairing::{Layout, Pairing};

/// A bubble with each pair of a pairing contracted to a node.
///
/// Every color is a permutation of the nodes: `successors[c - 1][k]` is the
/// node reached from node `k` by its black vertex's color-`c` edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedGraph {
    /// Number of colors of the bubble.
    pub d: usize,
    /// Per-color successor permutations on the nodes.
    pub successors: Vec<Vec<usize>>,
}

impl ContractedGraph {
    /// Number of nodes (pairs).
    pub fn node_count(&self) -> usize {
        self.successors.first().map_or(0, Vec::len)
    }

    /// Number of connected components of the whole graph.
    pub fn component_count(&self) -> usize {
        let n = self.node_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n;
        for s in &self.successors {
            for (k, &t) in s.iter().enumerate() {
                let (a, b) = (find(&mut parent, k), find(&mut parent, t));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        comps
    }

    /// Circuit rank of the whole graph.
    pub fn circuit_rank(&self) -> usize {
        self.d * self.node_count() + self.component_count() - self.node_count()
    }

    /// Circuit rank of the color-`c` subgraph, i.e. its number of cycles.
    pub fn color_circuit_rank(&self, c: usize) -> usize {
        cycle_count(&self.successors[c - 1])
    }

    /// `L_m = L(total) − Σ_c L(color c)`.
    pub fn lm(&self) -> usize {
        let per_color: usize = (1..=self.d).map(|c| self.color_circuit_rank(c)).sum();
        self.circuit_rank() - per_color
    }
}

/// Contracts the pairs of `omega` in the bubble `b`. Nodes follow the order
/// of the black vertices.
pub fn contracted_graph(
    b: &ColoredGraph,
    omega: &Pairing,
) -> Result<ContractedGraph, PairingError> {
    let layout = Layout::new(b)?;
    if omega.len() != layout.n() {
        return Err(PairingError::Mismatched(
            "pairing size differs from the bubble".into(),
        ));
    }
    let positions = layout.positions(omega, b.vertex_count());
    Ok(ContractedGraph {
        d: b.dimension(),
        successors: layout.successors(&positions),
    })
}

/// `L_m` of the bubble contracted along `omega`.
pub fn lm(b: &ColoredGraph, omega: &Pairing) -> Result<usize, PairingError> {
    Ok(contracted_graph(b, omega)?.lm())
}

/// The SYK order of the covering `b^Ω`, equal to `L_m`.
pub fn delta0(b: &ColoredGraph, omega: &Pairing) -> Result<usize, PairingError> {
    lm(b, omega)
}
