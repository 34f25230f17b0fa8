//! Brute-force counts of rooted coverings by order and number of marks.

use std::collections::BTreeMap;

use colgraph_core::map::{cycle_count, cycles};
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::SykError;
use crate::map::{Corner, SykMap};
use crate::scheme::{prune, to_scheme};

/// Largest number of pairs accepted by [`count_by_order`].
pub const MAX_PAIRS: usize = 6;

/// Counts of marked coverings with `pairs` white squares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCount {
    pub pairs: usize,
    /// Labeled closed graphs with ordered marks, divided by `(k!)²`.
    pub rooted: BigRational,
    /// Rooted counts split by scheme signature, when requested.
    pub by_scheme: BTreeMap<String, BigRational>,
}

fn connected_without(k: usize, perms: &[Vec<usize>], removed: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..2 * k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = 2 * k;
    for (c, p) in perms.iter().enumerate() {
        for (b, &w) in p.iter().enumerate() {
            if removed.contains(&(c, b)) {
                continue;
            }
            let (x, y) = (find(&mut parent, b), find(&mut parent, k + w));
            if x != y {
                parent[x] = y;
                count -= 1;
            }
        }
    }
    count == 1
}

fn components(k: usize, perms: &[Vec<usize>]) -> usize {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = k;
    for p in perms {
        for (x, &y) in p.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
    }
    count
}

/// Rooted counts of coverings with `D + 1` colors, order `δ₀ = order` and
/// `marks` marked colored edges, for `1..=max_pairs` pairs.
///
/// Objects are labeled closed graphs with `k` black and `k` white vertices
/// together with an ordered tuple of marked colored edges lying on distinct
/// colored vertices of the stacked map, such that the bubble minus the
/// marked edges stays connected. The rooted count is the labeled count over
/// `(k!)²`. Relabeling whites makes the color-0 matching the identity, which
/// leaves a factor `k!`.
pub fn count_by_order(
    d: usize,
    order: usize,
    marks: usize,
    max_pairs: usize,
) -> Result<Vec<OrderCount>, SykError> {
    count_impl(d, order, marks, max_pairs, false)
}

/// As [`count_by_order`], also splitting each count by scheme signature.
pub fn count_by_scheme(
    d: usize,
    order: usize,
    marks: usize,
    max_pairs: usize,
) -> Result<Vec<OrderCount>, SykError> {
    count_impl(d, order, marks, max_pairs, true)
}

fn count_impl(
    d: usize,
    order: usize,
    marks: usize,
    max_pairs: usize,
    schemes: bool,
) -> Result<Vec<OrderCount>, SykError> {
    if max_pairs > MAX_PAIRS {
        return Err(SykError::CapExceeded {
            pairs: max_pairs,
            cap: MAX_PAIRS,
        });
    }
    let mut out = Vec::new();
    for k in 1..=max_pairs {
        let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
        let tuples: Vec<Vec<usize>> = (0..d)
            .map(|_| 0..perms.len())
            .multi_cartesian_product()
            .collect();
        let (total, split) = tuples
            .par_iter()
            .map(|tuple| {
                let ps: Vec<Vec<usize>> = tuple.iter().map(|&i| perms[i].clone()).collect();
                let mut count = 0u64;
                let mut split: BTreeMap<String, u64> = BTreeMap::new();
                // with the identity pairing, σ_c is p_c itself
                let rank = k * d + components(k, &ps)
                    - k
                    - ps.iter().map(|p| cycle_count(p)).sum::<usize>();
                if rank != order {
                    return (count, split);
                }
                let stars: Vec<(usize, Vec<usize>)> = ps
                    .iter()
                    .enumerate()
                    .flat_map(|(c, p)| cycles(p).into_iter().map(move |cy| (c, cy)))
                    .collect();
                for choice in stars.iter().permutations(marks) {
                    for corners in choice
                        .iter()
                        .map(|(_, cy)| cy.iter())
                        .multi_cartesian_product()
                    {
                        let removed: Vec<(usize, usize)> = choice
                            .iter()
                            .zip(&corners)
                            .map(|((c, _), &&b)| (*c, b))
                            .collect();
                        if !connected_without(k, &ps, &removed) {
                            continue;
                        }
                        count += 1;
                        if schemes {
                            let corners = removed
                                .iter()
                                .map(|&(c, b)| Corner {
                                    color: c + 1,
                                    square: b,
                                })
                                .collect();
                            let map =
                                SykMap::from_successors(ps.clone(), corners).expect("valid marks");
                            let sig = to_scheme(&prune(&map))
                                .map(|s| {
                                    s.nlo_two_point_shape()
                                        .map_or_else(|| s.signature(), |x| x.to_string())
                                })
                                .unwrap_or_else(|_| "unrooted".into());
                            *split.entry(sig).or_default() += 1;
                        }
                    }
                }
                (count, split)
            })
            .reduce(
                || (0, BTreeMap::new()),
                |(a, mut sa), (b, sb)| {
                    for (key, v) in sb {
                        *sa.entry(key).or_default() += v;
                    }
                    (a + b, sa)
                },
            );
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        let rooted = |n: u64| BigRational::new(BigInt::from(n), fact.clone());
        out.push(OrderCount {
            pairs: k,
            rooted: rooted(total),
            by_scheme: split.into_iter().map(|(key, v)| (key, rooted(v))).collect(),
        });
    }
    Ok(out)
}
