//! Bubble-restricted gluings: copies of bubbles joined by a color-0 perfect
//! matching.

use std::collections::BTreeMap;

use colgraph_core::map::cycle_count;
use colgraph_core::{canonical_form, is_melonic, ColoredGraph, VertexId};
use colgraph_pairings::{require_bubble, Layout, Pairing};
use colgraph_stacked::bubble_isomorphism;
use itertools::Itertools;
use rayon::prelude::*;

use crate::error::EnumError;

/// Default cap on the total number of black vertices.
pub const DEFAULT_CAP: usize = 12;

/// How gluings are counted and deduplicated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootingMode {
    /// Every color-0 matching, no deduplication.
    Labeled,
    /// Matchings whose black `0` is matched to white `0`.
    RootedEdge,
    /// One graph per isomorphism class.
    Unlabeled,
}

/// A set of bubbles and the range of bubble counts to enumerate.
#[derive(Debug, Clone)]
pub struct GluingSpec {
    pub bubbles: Vec<ColoredGraph>,
    pub b_max: usize,
    pub mode: RootingMode,
    /// Keep only connected gluings.
    pub connected_only: bool,
    /// Cap on the total number of black vertices.
    pub cap: usize,
    layouts: Vec<Layout>,
}

impl GluingSpec {
    /// Connected labeled gluings of up to `b_max` bubbles from `bubbles`.
    pub fn new(bubbles: Vec<ColoredGraph>, b_max: usize) -> Result<Self, EnumError> {
        if bubbles.is_empty() || b_max == 0 {
            return Err(EnumError::InvalidSpec(
                "need at least one bubble and b_max >= 1".into(),
            ));
        }
        let d = bubbles[0].dimension();
        let mut layouts = Vec::with_capacity(bubbles.len());
        for b in &bubbles {
            if b.dimension() != d {
                return Err(EnumError::InvalidSpec(
                    "bubbles of different dimensions".into(),
                ));
            }
            require_bubble(b)?;
            layouts.push(Layout::new(b)?);
        }
        Ok(GluingSpec {
            bubbles,
            b_max,
            mode: RootingMode::Labeled,
            connected_only: true,
            cap: DEFAULT_CAP,
            layouts,
        })
    }

    pub fn with_mode(mut self, mode: RootingMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_connected_only(mut self, connected_only: bool) -> Self {
        self.connected_only = connected_only;
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Number of colors `D` of the bubbles.
    pub fn dimension(&self) -> usize {
        self.bubbles[0].dimension()
    }

    /// Multisets of `b` bubble types, as sorted type lists.
    pub fn multisets(&self, b: usize) -> Vec<Vec<usize>> {
        (0..self.bubbles.len())
            .combinations_with_replacement(b)
            .collect()
    }

    /// The placement of the given copies, checking the cap.
    pub fn placement(&self, copies: &[usize]) -> Result<Placement, EnumError> {
        let blacks: usize = copies.iter().map(|&t| self.layouts[t].n()).sum();
        if blacks > self.cap {
            return Err(EnumError::CapExceeded {
                blacks,
                cap: self.cap,
            });
        }
        Ok(Placement::new(self.dimension(), &self.layouts, copies))
    }

    /// Fails if some multiset of at most `b_max` bubbles exceeds the cap.
    pub fn check_cap(&self) -> Result<(), EnumError> {
        let largest = self.layouts.iter().map(Layout::n).max().unwrap_or(0);
        let blacks = largest * self.b_max;
        if blacks > self.cap {
            return Err(EnumError::CapExceeded {
                blacks,
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub(crate) fn layout(&self, t: usize) -> &Layout {
        &self.layouts[t]
    }
}

/// Copies of bubbles laid out side by side: copy `j` owns the black
/// positions `offsets[j]..offsets[j + 1]` and the same white positions.
#[derive(Debug, Clone)]
pub struct Placement {
    d: usize,
    pub copies: Vec<usize>,
    pub offsets: Vec<usize>,
    /// `perms[c - 1][k]`: white position joined to black `k` by color `c`.
    perms: Vec<Vec<usize>>,
    inverses: Vec<Vec<usize>>,
    copy_of: Vec<usize>,
}

impl Placement {
    #[allow(clippy::needless_range_loop)]
    fn new(d: usize, layouts: &[Layout], copies: &[usize]) -> Self {
        let mut offsets = vec![0];
        for &t in copies {
            offsets.push(offsets.last().unwrap() + layouts[t].n());
        }
        let n = *offsets.last().unwrap();
        let mut perms = vec![vec![0; n]; d];
        let mut copy_of = vec![0; n];
        for (j, &t) in copies.iter().enumerate() {
            for k in 0..layouts[t].n() {
                copy_of[offsets[j] + k] = j;
                for c in 0..d {
                    perms[c][offsets[j] + k] = offsets[j] + layouts[t].perms[c][k];
                }
            }
        }
        let inverses = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; n];
                for (k, &w) in p.iter().enumerate() {
                    inv[w] = k;
                }
                inv
            })
            .collect();
        Placement {
            d,
            copies: copies.to_vec(),
            offsets,
            perms,
            inverses,
            copy_of,
        }
    }

    /// Total number of black vertices.
    pub fn n(&self) -> usize {
        self.copy_of.len()
    }

    /// `Φ₀` of the gluing with color-0 matching `sigma` (black position to
    /// white position).
    pub fn zero_score(&self, sigma: &[usize]) -> usize {
        let n = self.n();
        let mut buf = vec![0; n];
        self.inverses
            .iter()
            .map(|inv| {
                for k in 0..n {
                    buf[k] = inv[sigma[k]];
                }
                cycle_count(&buf)
            })
            .sum()
    }

    /// Whether the matching connects all copies.
    pub fn connected(&self, sigma: &[usize]) -> bool {
        let b = self.copies.len();
        let mut parent: Vec<usize> = (0..b).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut classes = b;
        for (k, &w) in sigma.iter().enumerate() {
            let (x, y) = (
                find(&mut parent, self.copy_of[k]),
                find(&mut parent, self.copy_of[w]),
            );
            if x != y {
                parent[x] = y;
                classes -= 1;
            }
        }
        classes == 1
    }

    /// The glued graph: blacks `0..n`, whites `n..2n`.
    pub fn graph(&self, sigma: &[usize]) -> ColoredGraph {
        let colors: Vec<usize> = (0..=self.d).collect();
        let mut perms = vec![sigma.to_vec()];
        perms.extend(self.perms.iter().cloned());
        ColoredGraph::from_permutations(self.d, &colors, &perms)
            .expect("matchings give proper graphs")
    }

    /// The pairing of the glued graph made of one bubble pairing per copy,
    /// each given in positional form.
    pub fn pairing(&self, g: &ColoredGraph, per_copy: &[Vec<usize>]) -> Pairing {
        let n = self.n();
        let pairs: Vec<(VertexId, VertexId)> = per_copy
            .iter()
            .enumerate()
            .flat_map(|(j, omega)| {
                let off = self.offsets[j];
                omega
                    .iter()
                    .enumerate()
                    .map(move |(k, &w)| (VertexId(off + k), VertexId(n + off + w)))
            })
            .collect();
        Pairing::new(g, &pairs).expect("per-copy pairings cover the gluing")
    }
}

/// Folds over all perfect matchings of `n` blacks to `n` whites in
/// lexicographic order, in parallel over the image of black `0`. With
/// `rooted`, only matchings with black `0` on white `0` are visited. Partial
/// results are merged in order, so the outcome does not depend on threads.
pub fn fold_matchings<A, I, S, M>(n: usize, rooted: bool, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    S: Fn(&mut A, &[usize]) + Sync,
    M: Fn(A, A) -> A + Sync,
{
    if n == 0 {
        let mut acc = init();
        step(&mut acc, &[]);
        return acc;
    }
    let firsts: Vec<usize> = if rooted { vec![0] } else { (0..n).collect() };
    let parts: Vec<A> = firsts
        .into_par_iter()
        .map(|w0| {
            let mut acc = init();
            let mut sigma = vec![usize::MAX; n];
            let mut used = vec![false; n];
            sigma[0] = w0;
            used[w0] = true;
            fn rec<A>(
                k: usize,
                sigma: &mut [usize],
                used: &mut [bool],
                acc: &mut A,
                step: &(dyn Fn(&mut A, &[usize]) + Sync),
            ) {
                let n = sigma.len();
                if k == n {
                    step(acc, sigma);
                    return;
                }
                for w in 0..n {
                    if !used[w] {
                        used[w] = true;
                        sigma[k] = w;
                        rec(k + 1, sigma, used, acc, step);
                        used[w] = false;
                    }
                }
            }
            rec(1, &mut sigma, &mut used, &mut acc, &step);
            acc
        })
        .collect();
    parts.into_iter().reduce(merge).unwrap_or_else(init)
}

/// One glued graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub graph: ColoredGraph,
    /// Bubble type of each copy.
    pub copies: Vec<usize>,
    /// Color-0 matching in positional form.
    pub matching: Vec<usize>,
    pub zero_score: usize,
}

impl Gluing {
    /// Number of bubbles.
    pub fn bubble_count(&self) -> usize {
        self.copies.len()
    }
}

/// All gluings of `b` bubbles under the rooting mode and connectivity filter of `spec`.
pub fn gluings_at(spec: &GluingSpec, b: usize) -> Result<Vec<Gluing>, EnumError> {
    let mut out = Vec::new();
    for copies in spec.multisets(b) {
        let place = spec.placement(&copies)?;
        let rooted = spec.mode == RootingMode::RootedEdge;
        let found = fold_matchings(
            place.n(),
            rooted,
            Vec::new,
            |acc: &mut Vec<Vec<usize>>, sigma| {
                if !spec.connected_only || place.connected(sigma) {
                    acc.push(sigma.to_vec());
                }
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        out.extend(found.into_iter().map(|sigma| Gluing {
            graph: place.graph(&sigma),
            zero_score: place.zero_score(&sigma),
            copies: copies.clone(),
            matching: sigma,
        }));
    }
    if spec.mode == RootingMode::Unlabeled {
        out = dedup_canonical(out);
    }
    Ok(out)
}

/// All gluings with `1..=b_max` bubbles.
pub fn enumerate_gluings(spec: &GluingSpec) -> Result<Vec<Gluing>, EnumError> {
    spec.check_cap()?;
    let mut out = Vec::new();
    for b in 1..=spec.b_max {
        out.extend(gluings_at(spec, b)?);
    }
    Ok(out)
}

/// Keeps the first gluing of each isomorphism class.
pub fn dedup_canonical(list: Vec<Gluing>) -> Vec<Gluing> {
    let forms: Vec<String> = list.par_iter().map(|g| canonical_form(&g.graph)).collect();
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for (g, form) in list.into_iter().zip(forms) {
        if seen.insert(form, ()).is_none() {
            out.push(g);
        }
    }
    out
}

/// Number of color-preserving automorphisms of a connected bubble.
pub fn automorphism_count(b: &ColoredGraph) -> usize {
    let Some(start) = b.blacks().next() else {
        return 1;
    };
    b.blacks()
        .filter(|&v| bubble_isomorphism(b, start, b, v).is_some())
        .count()
}

/// Counts of gluings with a given number of bubbles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingCounts {
    pub b: usize,
    /// All labeled matchings.
    pub labeled: u64,
    /// Labeled matchings giving connected gluings.
    pub connected: u64,
    /// Connected gluings with a distinguished color-0 edge, up to
    /// isomorphism.
    pub rooted: u64,
    /// Connected isomorphism classes, when the rooting mode asks for them.
    pub unlabeled: Option<usize>,
}

/// Counts per bubble number. Rooted classes are obtained from the free
/// action of copy permutations and bubble automorphisms on labeled gluings
/// with a root.
pub fn count_gluings(spec: &GluingSpec) -> Result<Vec<GluingCounts>, EnumError> {
    spec.check_cap()?;
    let autos: Vec<u64> = spec
        .bubbles
        .iter()
        .map(|b| automorphism_count(b) as u64)
        .collect();
    let mut out = Vec::new();
    for b in 1..=spec.b_max {
        let (mut labeled, mut connected, mut rooted) = (0u64, 0u64, 0u64);
        for copies in spec.multisets(b) {
            let place = spec.placement(&copies)?;
            let (all, conn) = fold_matchings(
                place.n(),
                false,
                || (0u64, 0u64),
                |acc, sigma| {
                    acc.0 += 1;
                    acc.1 += u64::from(place.connected(sigma));
                },
                |a, b| (a.0 + b.0, a.1 + b.1),
            );
            labeled += all;
            connected += conn;
            let mut group = 1u64;
            for (t, run) in &copies.iter().chunk_by(|&&t| t) {
                let m = run.count() as u64;
                group *= (1..=m).product::<u64>() * autos[t].pow(m as u32);
            }
            let roots = conn * place.n() as u64;
            debug_assert_eq!(roots % group, 0, "the action on rooted gluings is free");
            rooted += roots / group;
        }
        let unlabeled = if spec.mode == RootingMode::Unlabeled {
            let connected_spec = spec.clone().with_connected_only(true);
            Some(gluings_at(&connected_spec, b)?.len())
        } else {
            None
        };
        out.push(GluingCounts {
            b,
            labeled,
            connected,
            rooted,
            unlabeled,
        });
    }
    Ok(out)
}

/// Number of rooted connected melonic closed graphs with `2k` vertices and
/// colors `0..=d`: closed graphs with black `0` joined to white `0` by
/// color 0 are enumerated, and the count is divided by `((k - 1)!)²`.
pub fn rooted_melonic_count(d: usize, k: usize) -> u64 {
    if k == 0 {
        return 0;
    }
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    let rooted_zero: Vec<&Vec<usize>> = perms.iter().filter(|p| p[0] == 0).collect();
    let colors: Vec<usize> = (0..=d).collect();
    let tuples: Vec<Vec<usize>> = (0..d)
        .map(|_| 0..perms.len())
        .multi_cartesian_product()
        .collect();
    let count: u64 = tuples
        .par_iter()
        .map(|tuple| {
            let mut local = 0u64;
            for zero in &rooted_zero {
                let mut all = vec![(*zero).clone()];
                all.extend(tuple.iter().map(|&i| perms[i].clone()));
                let g = ColoredGraph::from_permutations(d, &colors, &all).expect("permutations");
                if g.is_connected() && is_melonic(&g).melonic {
                    local += 1;
                }
            }
            local
        })
        .sum();
    let fact: u64 = (1..k as u64).product();
    count / (fact * fact)
}
