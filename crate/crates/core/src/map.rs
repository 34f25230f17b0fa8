//! Combinatorial maps given by a rotation and an edge involution.
//!
//! Darts are `0..n`. `sigma` is the rotation around vertices and `alpha` a
//! fixed-point-free involution pairing the two darts of each edge. Edges may
//! be twisted. Faces are computed on flags `(dart, side)`: the face orbits are
//! the orbits of the two involutions that change the edge around a vertex
//! (`tau1`) and change the vertex along an edge (`tau0`). A corner is
//! identified by the dart `h` it follows: it sits between `h` and `sigma(h)`.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

/// Errors raised when building a map.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("rotation is not a permutation of 0..{0}")]
    BadRotation(usize),
    #[error("edge involution is not a fixed-point-free involution")]
    BadInvolution,
    #[error("twist flags must agree on both darts of an edge")]
    BadTwist,
    #[error("corner {0} is not a dart")]
    BadCorner(usize),
}

/// A face as the list of corners it passes through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub corners: Vec<usize>,
}

/// A possibly disconnected combinatorial map with optional twists, isolated
/// vertices and marked corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    twisted: Vec<bool>,
    isolated: usize,
    marked: BTreeSet<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Number of cycles of a permutation.
pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
        }
    }
    count
}

/// Cycles of a permutation, each starting at its smallest element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

/// Inverse of a permutation.
pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// `compose(a, b)[i] = a[b[i]]`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

impl CombinatorialMap {
    /// A map with untwisted edges and no isolated vertex.
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>) -> Result<Self, MapError> {
        if !is_permutation(&sigma) {
            return Err(MapError::BadRotation(sigma.len()));
        }
        if alpha.len() != sigma.len()
            || alpha
                .iter()
                .enumerate()
                .any(|(h, &a)| a >= alpha.len() || a == h || alpha[a] != h)
        {
            return Err(MapError::BadInvolution);
        }
        let n = sigma.len();
        Ok(CombinatorialMap {
            sigma,
            alpha,
            twisted: vec![false; n],
            isolated: 0,
            marked: BTreeSet::new(),
        })
    }

    /// Sets per-dart twist flags (both darts of an edge must agree).
    pub fn with_twists(mut self, twisted: Vec<bool>) -> Result<Self, MapError> {
        if twisted.len() != self.sigma.len()
            || (0..twisted.len()).any(|h| twisted[h] != twisted[self.alpha[h]])
        {
            return Err(MapError::BadTwist);
        }
        self.twisted = twisted;
        Ok(self)
    }

    /// Adds vertices without darts; each one bounds a single face.
    pub fn with_isolated_vertices(mut self, count: usize) -> Self {
        self.isolated = count;
        self
    }

    /// Marks the corners following the given darts.
    pub fn with_marked_corners(
        mut self,
        corners: impl IntoIterator<Item = usize>,
    ) -> Result<Self, MapError> {
        for c in corners {
            if c >= self.sigma.len() {
                return Err(MapError::BadCorner(c));
            }
            self.marked.insert(c);
        }
        Ok(self)
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        cycle_count(&self.sigma) + self.isolated
    }

    pub fn isolated_vertices(&self) -> usize {
        self.isolated
    }

    pub fn marked_corners(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    /// Faces with at least one dart, found as flag orbits.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.sigma.len();
        let sigma_inv = inverse(&self.sigma);
        // flag 2h is (h, left), 2h+1 is (h, right)
        let tau1 = |f: usize| {
            let h = f / 2;
            if f % 2 == 1 {
                2 * self.sigma[h]
            } else {
                2 * sigma_inv[h] + 1
            }
        };
        let tau0 = |f: usize| {
            let h = f / 2;
            let s = f % 2;
            let s2 = if self.twisted[h] { s } else { 1 - s };
            2 * self.alpha[h] + s2
        };
        let corner_of = |f: usize| if f % 2 == 1 { f / 2 } else { sigma_inv[f / 2] };
        let mut seen = vec![false; 2 * n];
        let mut faces = Vec::new();
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut corners = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                corners.insert(corner_of(x));
                for y in [tau0(x), tau1(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            faces.push(Face {
                corners: corners.into_iter().collect(),
            });
        }
        faces
    }

    /// Total face count, isolated vertices included.
    pub fn face_count(&self) -> usize {
        self.faces().len() + self.isolated
    }

    /// Faces meeting no marked corner, isolated vertices included.
    pub fn interior_face_count(&self) -> usize {
        self.faces()
            .iter()
            .filter(|f| f.corners.iter().all(|c| !self.marked.contains(c)))
            .count()
            + self.isolated
    }

    /// Connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let n = self.sigma.len();
        let mut uf = UnionFind::<usize>::new(n);
        for h in 0..n {
            uf.union(h, self.sigma[h]);
            uf.union(h, self.alpha[h]);
        }
        let roots: BTreeSet<usize> = (0..n).map(|h| uf.find(h)).collect();
        roots.len() + self.isolated
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Euler genus `2K - (V - E + F)`, summed over components.
    pub fn euler_genus(&self) -> usize {
        (2 * self.component_count() as i64 - self.euler_characteristic()) as usize
    }

    /// Orientable genus summed over components; meaningful for untwisted
    /// maps.
    pub fn genus(&self) -> usize {
        self.euler_genus() / 2
    }

    /// Circuit rank `E - V + K`.
    pub fn circuit_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_edge_has_one_face() {
        let m = CombinatorialMap::new(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.genus(), 0);
        assert_eq!(m.circuit_rank(), 0);
    }

    #[test]
    fn plane_loop_has_two_faces_and_twisted_loop_one() {
        let m = CombinatorialMap::new(vec![1, 0], vec![1, 0]).unwrap();
        assert_eq!(m.face_count(), 2);
        assert_eq!(m.circuit_rank(), 1);
        let t = m.with_twists(vec![true, true]).unwrap();
        assert_eq!(t.face_count(), 1);
        assert_eq!(t.euler_genus(), 1);
    }

    #[test]
    fn torus_from_two_interleaved_loops() {
        // one vertex, rotation (0 1 2 3), loops {0,2} and {1,3}
        let m = CombinatorialMap::new(vec![1, 2, 3, 0], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.genus(), 1);
    }

    #[test]
    fn faces_count_cycles_of_sigma_alpha_when_untwisted() {
        let sigma = vec![1, 2, 0, 4, 5, 3];
        let alpha = vec![3, 5, 4, 0, 2, 1];
        let m = CombinatorialMap::new(sigma.clone(), alpha.clone()).unwrap();
        assert_eq!(m.face_count(), cycle_count(&compose(&sigma, &alpha)));
    }

    #[test]
    fn marked_corners_break_faces() {
        let m = CombinatorialMap::new(vec![1, 0], vec![1, 0])
            .unwrap()
            .with_marked_corners([0])
            .unwrap()
            .with_isolated_vertices(1);
        assert_eq!(m.face_count(), 3);
        assert_eq!(m.interior_face_count(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            CombinatorialMap::new(vec![0, 0], vec![1, 0]),
            Err(MapError::BadRotation(2))
        );
        assert_eq!(
            CombinatorialMap::new(vec![0, 1], vec![0, 1]),
            Err(MapError::BadInvolution)
        );
    }
}
