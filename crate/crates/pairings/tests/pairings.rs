//! Pairings, coverings and coefficients against direct computations on the
//! covering graphs.

use colgraph_core::fixtures::{
    cyclic_bubble, k33, melon_bubble, octahedron, quartic_melonic, six_color_bubble,
};
use colgraph_core::random::random_bubble;
use colgraph_core::{gurau_degree, is_melonic, score, zero_score, ColoredGraph};
use colgraph_pairings::{
    coefficients, coefficients_nonconnected, covering, delta0, enumerate_pairings, lm,
    optimal_pairings, pairing_from_color, Pairing, DEFAULT_CAP,
};
use itertools::Itertools;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

/// Every connected bubble with colors `1..=d` on `2n` vertices, given by one
/// permutation per color.
fn all_bubbles(d: usize, n: usize) -> Vec<ColoredGraph> {
    let colors: Vec<usize> = (1..=d).collect();
    (0..d)
        .map(|_| (0..n).permutations(n))
        .multi_cartesian_product()
        .map(|perms| ColoredGraph::from_permutations(d, &colors, &perms).unwrap())
        .filter(ColoredGraph::is_connected)
        .collect()
}

/// Argmax of the 0-score over all pairings, computed on explicit coverings.
fn brute_force_optimum(b: &ColoredGraph) -> (usize, Vec<Pairing>) {
    let scored: Vec<(usize, Pairing)> = enumerate_pairings(b)
        .unwrap()
        .map(|o| (zero_score(&covering(b, &o).unwrap()), o))
        .collect();
    let best = scored.iter().map(|(s, _)| *s).max().unwrap();
    let mut list: Vec<Pairing> = scored
        .into_iter()
        .filter(|(s, _)| *s == best)
        .map(|(_, o)| o)
        .collect();
    list.sort();
    (best, list)
}

#[test]
fn pairing_counts() {
    assert_eq!(
        enumerate_pairings(&quartic_melonic(3, 1)).unwrap().count(),
        2
    );
    assert_eq!(enumerate_pairings(&k33()).unwrap().count(), 6);
    assert_eq!(enumerate_pairings(&octahedron()).unwrap().count(), 24);
    let all: Vec<Pairing> = enumerate_pairings(&octahedron()).unwrap().collect();
    assert!(all.iter().tuple_windows().all(|(a, b)| a < b));
}

#[test]
fn coverings_restore_the_bubble() {
    let b = k33();
    for o in enumerate_pairings(&b).unwrap() {
        let g = covering(&b, &o).unwrap();
        assert_eq!(g.without_color(0), b);
        g.require_regular(&[0, 1, 2, 3]).unwrap();
    }
}

#[test]
fn k33_coverings() {
    let b = k33();
    assert_eq!(
        zero_score(&covering(&b, &pairing_from_color(&b, 1).unwrap()).unwrap()),
        5
    );
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    assert_eq!((opt.zero_score, opt.pairings.len()), (6, 3));
    assert_eq!(lm(&b, opt.chosen()).unwrap(), 1);
    assert_eq!(delta0(&b, opt.chosen()).unwrap(), 1);
}

#[test]
fn melonic_covering_has_degree_zero() {
    let b = quartic_melonic(4, 2);
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    assert_eq!(opt.pairings.len(), 1);
    let g = covering(&b, opt.chosen()).unwrap();
    assert_eq!(gurau_degree(&g).unwrap(), r(0));
    assert_eq!(delta0(&b, opt.chosen()).unwrap(), 0);
}

#[test]
fn octahedron_optimal_pairings_follow_the_colors() {
    let b = octahedron();
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    assert_eq!(opt.zero_score, 8);
    let mut by_color: Vec<Pairing> = (1..=3)
        .map(|c| pairing_from_color(&b, c).unwrap())
        .collect();
    by_color.sort();
    assert_eq!(opt.pairings, by_color);
}

#[test]
fn six_color_bubble_order_and_score() {
    let b = six_color_bubble();
    let omega = pairing_from_color(&b, 6).unwrap();
    assert_eq!(zero_score(&covering(&b, &omega).unwrap()), 11);
    assert_eq!(delta0(&b, &omega).unwrap(), 5);
    assert_eq!(score(&b), 24);
}

#[test]
fn score_identity_for_every_small_bubble_and_pairing() {
    for d in 2..=4 {
        for n in 1..=3 {
            for b in all_bubbles(d, n) {
                for o in enumerate_pairings(&b).unwrap() {
                    let phi0 = zero_score(&covering(&b, &o).unwrap());
                    assert_eq!(phi0 + lm(&b, &o).unwrap(), 1 + n * (d - 1));
                }
            }
        }
    }
}

#[test]
fn optimal_search_matches_brute_force_and_keeps_large_pairs() {
    for d in 3..=5 {
        for n in 1..=3 {
            for b in all_bubbles(d, n) {
                let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
                let (best, list) = brute_force_optimum(&b);
                assert_eq!(opt.zero_score, best);
                assert_eq!(opt.pairings, list);
                // every pair joined by more than D/2 edges lies in every optimum
                for e in b.edges() {
                    let h = b
                        .edges()
                        .iter()
                        .filter(|f| f.black == e.black && f.white == e.white)
                        .count();
                    if 2 * h > d {
                        assert!(list.iter().all(|o| o.pairs().contains(&(e.black, e.white))));
                    }
                }
            }
        }
    }
}

#[test]
fn zero_s_iff_melonic() {
    for n in 1..=3 {
        for b in all_bubbles(3, n) {
            let rep = coefficients(&b).unwrap();
            assert!(rep.s >= r(0));
            assert_eq!(rep.s == r(0), is_melonic(&b).melonic);
        }
    }
}

#[test]
fn melonic_coefficients() {
    for d in 2..=5 {
        for p in 1..=4 {
            let b = if p == 1 {
                melon_bubble(d)
            } else {
                cyclic_bubble(d, &[1], p)
            };
            if !is_melonic(&b).melonic {
                continue;
            }
            let rep = coefficients(&b).unwrap();
            assert_eq!(rep.tilde_a, r(((d - 1) * (p - 1)) as i64));
            assert_eq!(rep.s, r(0));
        }
    }
}

#[test]
fn union_of_polygons() {
    for (p, q) in [(1, 1), (2, 3), (4, 2)] {
        let polygon = |k: usize| {
            if k == 1 {
                melon_bubble(2)
            } else {
                cyclic_bubble(2, &[1], k)
            }
        };
        let reps = [
            coefficients(&polygon(p)).unwrap(),
            coefficients(&polygon(q)).unwrap(),
        ];
        let u = coefficients_nonconnected(&reps, 2).unwrap();
        assert_eq!(u.tilde_a, r(2 + (p as i64 - 1) + (q as i64 - 1)));
        assert!(u.relations_hold());
        // the union bubble itself gives the same value of a
        let union = polygon(p).disjoint_union(&polygon(q)).unwrap();
        assert_eq!(
            u.a,
            (u.tilde_a + r(score(&union) as i64)) / r(union.vertex_count() as i64)
        );
    }
}

#[test]
fn union_of_melonic_bubbles_has_negative_s() {
    for k in 1..=4usize {
        let reps = vec![coefficients(&quartic_melonic(3, 1)).unwrap(); k];
        let u = coefficients_nonconnected(&reps, 3).unwrap();
        assert_eq!(u.s, r(1 - k as i64));
    }
}

proptest! {
    #[test]
    fn coefficient_relations(seed in any::<u64>(), d in 2usize..=5, n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_bubble(d, n, &mut rng);
        prop_assume!(b.is_connected());
        let rep = coefficients(&b).unwrap();
        prop_assert!(rep.relations_hold());
        prop_assert_eq!(rep.tilde_a, rep.tree_tilde_a());
        prop_assert_eq!(rep.s, r(lm(&b, &rep.optimal[0]).unwrap() as i64));
    }
}
