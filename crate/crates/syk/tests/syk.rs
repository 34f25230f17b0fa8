//! Orders, pruning, schemes, chain series and brute-force counts.

use colgraph_core::fixtures::{k33, melon_bubble, octahedron};
use colgraph_core::random::{random_bubble, random_closed, random_melonic};
use colgraph_core::{zero_score, ColoredGraph, EdgeId};
use colgraph_enumerate::{series_solve, SeriesSpec};
use colgraph_pairings::{covering, enumerate_pairings, optimal_pairings, Pairing, DEFAULT_CAP};
use colgraph_syk::{
    bubble_connected_without, canonical_completion, chain_gf, classify_order, composite_gf,
    count_by_order, count_by_scheme, prune, to_scheme, tree_series, two_point_nlo_terms, ChainKind,
    CompositeGf, Corner, NloShape, PowerSeries, SykError, SykMap,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Order from the 0-score of the covering: `D + (D − 1)(V/2 − 1) − Φ₀`.
fn order_from_zero_score(b: &ColoredGraph, omega: &Pairing) -> usize {
    let d = b.dimension();
    d + (d - 1) * (b.vertex_count() / 2 - 1) - zero_score(&covering(b, omega).unwrap())
}

/// Chains counted by walking: the inner colored vertices carry colors
/// `c_1..c_m`, consecutive colors around each inner white square differ,
/// and the end colors are fixed by the end vertices.
fn walk_count(kind: ChainKind, d: usize, whites: usize, colored: usize) -> u64 {
    let (first_white, last_white, same) = match kind {
        ChainKind::ColoredColoredSame => (false, false, true),
        ChainKind::ColoredColoredOther => (false, false, false),
        ChainKind::WhiteWhiteSame | ChainKind::WhiteWhiteSameNonMinimal => (true, true, true),
        ChainKind::WhiteWhiteOther => (true, true, false),
        ChainKind::WhiteColoredSame | ChainKind::WhiteColoredSameNonMinimal => (true, false, true),
        ChainKind::WhiteColoredOther => (true, false, false),
    };
    let minimal_excluded = matches!(
        kind,
        ChainKind::WhiteWhiteSameNonMinimal | ChainKind::WhiteColoredSameNonMinimal
    );
    // vertices along the chain, ends excluded
    let inner_colored_expected = match (first_white, last_white) {
        (false, false) => whites.checked_sub(1),
        (true, true) => Some(whites + 1),
        _ => Some(whites),
    };
    if inner_colored_expected != Some(colored) {
        return 0;
    }
    if minimal_excluded
        && ((first_white && last_white && colored == 1) || (!last_white && colored == 0))
    {
        return 0;
    }
    let (i, j) = (1, if same { 1 } else { 2 });
    // the color sequence: start color, inner colored vertices, end color
    let mut count = 0;
    let inner = colored;
    let mut seq = vec![1; inner];
    loop {
        let mut colors = vec![i];
        colors.extend(&seq);
        colors.push(j);
        // white squares sit between consecutive entries, except next to a
        // white end, where the end color is the color of the adjacent
        // colored vertex
        let ok = if first_white && last_white {
            colors.len() >= 3
                && colors[1] == i
                && colors[colors.len() - 2] == j
                && colors[1..colors.len() - 1].windows(2).all(|w| w[0] != w[1])
        } else if first_white {
            // white start: first inner colored vertex has color i
            (inner == 0 && i == j)
                || (inner > 0 && colors[1] == i && colors[1..].windows(2).all(|w| w[0] != w[1]))
        } else {
            colors.windows(2).all(|w| w[0] != w[1])
        };
        count += u64::from(ok);
        // next sequence
        let mut pos = 0;
        while pos < inner && seq[pos] == d {
            seq[pos] = 1;
            pos += 1;
        }
        if pos == inner {
            break;
        }
        seq[pos] += 1;
    }
    count
}

#[test]
fn chain_series_match_walk_counts() {
    for d in 3..=5 {
        for kind in ChainKind::ALL {
            let gf = chain_gf(kind, d, 6);
            for whites in 0..=5 {
                for colored in 0..=5 {
                    let expected = walk_count(kind, d, whites, colored);
                    assert_eq!(
                        gf.coefficient(whites, colored),
                        int(expected as i64),
                        "{kind} D={d} whites={whites} colored={colored}"
                    );
                }
            }
        }
    }
}

#[test]
fn chain_linear_combination() {
    // D·G••ii + D(D−1)·G••ij = (1/z•)·D(D−1)y/(1 − (D−1)y)
    for d in 3..=6usize {
        let di = d as i64;
        let same = chain_gf(ChainKind::ColoredColoredSame, d, 8);
        let other = chain_gf(ChainKind::ColoredColoredOther, d, 8);
        for k in 1..=7usize {
            let lhs = same.coefficient(k, k - 1) * int(di)
                + other.coefficient(k, k - 1) * int(di * (di - 1));
            let rhs = int(di * (di - 1) * (di - 1).pow(k as u32 - 1));
            assert_eq!(lhs, rhs);
        }
    }
    assert_eq!(
        "wbii*".parse::<ChainKind>().unwrap(),
        ChainKind::WhiteColoredSameNonMinimal
    );
    assert_eq!(
        chain_gf(ChainKind::ColoredColoredOther, 3, 4).coefficient(1, 0),
        int(1)
    );
}

#[test]
fn tree_series_solves_its_equation() {
    for d in 2..=5 {
        let spec: SeriesSpec = format!("1+zG^{d}").parse().unwrap();
        let solved = series_solve(&spec, 10);
        let gt = tree_series(d, 10);
        for (k, c) in solved.iter().enumerate() {
            assert_eq!(gt.coefficient(k), &BigRational::from_integer(c.clone()));
        }
    }
}

#[test]
fn composite_series() {
    for d in 3..=5usize {
        let di = d as i64;
        let g4 = composite_gf(CompositeGf::FourPointLeading, d, 6);
        assert_eq!(g4.coefficient(0), &BigRational::zero());
        assert_eq!(g4.coefficient(1), &int(di * (di - 1)));
        let g2 = composite_gf(CompositeGf::TwoPointNextToLeading, d, 6);
        assert_eq!(g2.coefficient(1), &BigRational::zero());
        assert_eq!(g2.coefficient(2), &int(di * di * (di - 1) / 2));
        let [t1, t2, t3] = two_point_nlo_terms(d, 6);
        assert_eq!(g2, &(&t1 + &t2) + &t3);
        assert!(g2.is_integral() && g4.is_integral());
        let recount = composite_gf(CompositeGf::TwoPointNextToLeadingRecounted, d, 6);
        assert_eq!(recount.coefficient(2), g2.coefficient(2));
        assert_ne!(recount.coefficient(3), g2.coefficient(3));
    }
    assert!(matches!(
        "G6".parse::<CompositeGf>(),
        Err(SykError::UnknownSeries(_))
    ));
    assert_eq!(
        "g4_lo".parse::<CompositeGf>().unwrap(),
        CompositeGf::FourPointLeading
    );
}

#[test]
fn power_series_arithmetic() {
    let z = PowerSeries::z(5);
    let one = PowerSeries::one(5);
    let geometric = (&one - &z).inverse().unwrap();
    assert!(geometric.coefficients().iter().all(|c| *c == int(1)));
    assert_eq!(&geometric * &(&one - &z), one);
    assert!(z.inverse().is_none());
    let composed = geometric.compose(&z.scale(2));
    assert_eq!(composed.coefficient(4), &int(16));
}

#[test]
fn orders_of_known_coverings() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for d in 3..=4 {
        let colors: Vec<usize> = (1..=d).collect();
        let b = random_melonic(d, &colors, 3, &mut rng);
        let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
        assert_eq!(classify_order(&b, opt.chosen()).unwrap(), 0);
    }
    let k = k33();
    let opt = optimal_pairings(&k, DEFAULT_CAP).unwrap();
    assert_eq!(classify_order(&k, opt.chosen()).unwrap(), 1);
    assert_eq!(
        classify_order(
            &melon_bubble(3),
            &enumerate_pairings(&melon_bubble(3))
                .unwrap()
                .next()
                .unwrap()
        )
        .unwrap(),
        0
    );
    let two = k.disjoint_union(&k).unwrap();
    let pairs: Vec<_> = two
        .split_sides()
        .0
        .into_iter()
        .zip(two.split_sides().1)
        .collect();
    let omega = Pairing::new(&two, &pairs).unwrap();
    assert_eq!(classify_order(&two, &omega), Err(SykError::Disconnected));
}

#[test]
fn order_matches_the_zero_score_on_all_octahedron_pairings() {
    let b = octahedron();
    for omega in enumerate_pairings(&b).unwrap() {
        assert_eq!(
            classify_order(&b, &omega).unwrap(),
            order_from_zero_score(&b, &omega)
        );
    }
}

fn random_pairing(g: &ColoredGraph, rng: &mut ChaCha8Rng) -> Pairing {
    let (blacks, mut whites) = g.split_sides();
    whites.shuffle(rng);
    Pairing::new(g, &blacks.into_iter().zip(whites).collect::<Vec<_>>()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_is_the_zero_score_defect(seed in any::<u64>(), d in 3usize..=5, n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_bubble(d, n, &mut rng);
        let omega = random_pairing(&b, &mut rng);
        let map = SykMap::from_bubble(&b, &omega).unwrap();
        prop_assert_eq!(map.circuit_rank(), order_from_zero_score(&b, &omega));
        // pruning and collapsing chains keep the order
        let marks = vec![Corner { color: rng.gen_range(1..=d), square: rng.gen_range(0..n) }];
        let marked = map.with_marks(marks).unwrap();
        let pruned = prune(&marked);
        prop_assert_eq!(pruned.circuit_rank(), marked.circuit_rank());
        let scheme = to_scheme(&pruned).unwrap();
        prop_assert_eq!(scheme.circuit_rank(), marked.circuit_rank());
        for e in &scheme.edges {
            prop_assert!(!chain_gf(e.kind, d, 12).coefficient(e.whites, e.colored).is_zero());
        }
        for v in pruned.live_nodes() {
            prop_assert!(pruned.degree(v) >= 2 || pruned.is_marked(v) || pruned.live_nodes().count() == 1);
        }
    }

    #[test]
    fn canonical_completion_accounts_for_marks(seed in any::<u64>(), d in 3usize..=4, n in 2usize..=5, cut in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let closed = random_closed(d, n, &mut rng);
        let colored: Vec<EdgeId> = (0..closed.edge_count())
            .map(EdgeId)
            .filter(|&e| closed.edge(e).color != 0)
            .collect();
        let removed: std::collections::BTreeSet<EdgeId> = colored.choose_multiple(&mut rng, cut).copied().collect();
        let (open, _) = closed.without_edges(&removed);
        let (completed, added) = canonical_completion(&open).unwrap();
        prop_assert_eq!(added.len(), removed.len());
        let all: Vec<usize> = (0..=d).collect();
        completed.require_regular(&all).unwrap();
        // each marked edge lies on its own (0, i)-cycle
        prop_assert_eq!(zero_score(&open) + added.len(), zero_score(&completed));
        // the order relation needs the bubble connected once the marks go
        prop_assume!(bubble_connected_without(&completed, &added));
        let map = SykMap::from_covering(&completed, &[]).unwrap();
        let order_open = d + (d - 1) * (n - 1) - zero_score(&open);
        prop_assert_eq!(order_open, map.circuit_rank() + added.len());
    }
}

#[test]
fn pruning_trees() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let b = random_melonic(3, &[1, 2, 3], 4, &mut rng);
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    let map = SykMap::from_bubble(&b, opt.chosen()).unwrap();
    let bare = prune(&map);
    assert_eq!(bare.live_nodes().count(), 1);
    assert!(matches!(to_scheme(&bare), Err(SykError::Unrooted)));
    let rooted = map
        .with_marks(vec![Corner {
            color: 2,
            square: 0,
        }])
        .unwrap();
    let pruned = prune(&rooted);
    let live: Vec<usize> = pruned.live_nodes().collect();
    assert_eq!(live.len(), 1);
    assert!(pruned.is_marked(live[0]));
    let scheme = to_scheme(&pruned).unwrap();
    assert_eq!(
        (
            scheme.nodes.len(),
            scheme.edges.len(),
            scheme.circuit_rank()
        ),
        (1, 0, 0)
    );
}

#[test]
fn marks_must_sit_on_distinct_colored_vertices() {
    let b = k33();
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    let map = SykMap::from_bubble(&b, opt.chosen()).unwrap();
    let c = (1..=3)
        .find(|&c| map.colored_vertices(c).iter().any(|v| v.len() > 1))
        .unwrap();
    let v = map
        .colored_vertices(c)
        .into_iter()
        .find(|v| v.len() > 1)
        .unwrap();
    let twice = vec![
        Corner {
            color: c,
            square: v[0],
        },
        Corner {
            color: c,
            square: v[1],
        },
    ];
    assert!(matches!(
        map.clone().with_marks(twice),
        Err(SykError::InvalidMark(_))
    ));
    assert!(matches!(
        map.with_marks(vec![Corner {
            color: 4,
            square: 0
        }]),
        Err(SykError::InvalidMark(_))
    ));
}

#[test]
fn two_point_leading_order_counts_are_fuss_catalan() {
    let counts = count_by_order(3, 0, 1, 4).unwrap();
    let gt = tree_series(3, 4);
    for c in &counts {
        assert_eq!(c.rooted, gt.coefficient(c.pairs) * int(3));
    }
}

#[test]
fn four_point_leading_order_counts() {
    for d in 3..=4 {
        let pairs = if d == 3 { 4 } else { 3 };
        let g4 = composite_gf(CompositeGf::FourPointLeading, d, pairs);
        for c in count_by_order(d, 0, 2, pairs).unwrap() {
            assert_eq!(&c.rooted, g4.coefficient(c.pairs), "D={d} k={}", c.pairs);
        }
    }
}

#[test]
fn two_point_next_to_leading_counts() {
    let counts = count_by_scheme(3, 1, 1, 4).unwrap();
    let recount = composite_gf(CompositeGf::TwoPointNextToLeadingRecounted, 3, 4);
    let printed = composite_gf(CompositeGf::TwoPointNextToLeading, 3, 4);
    let [t1, t2, t3] = two_point_nlo_terms(3, 4);
    let gt = tree_series(3, 4);
    let white = &gt * &t2;
    let colored = t3.divide(&gt.pow(2)).unwrap();
    for c in &counts {
        let k = c.pairs;
        assert_eq!(&c.rooted, recount.coefficient(k));
        let get = |s: NloShape| {
            c.by_scheme
                .get(&s.to_string())
                .cloned()
                .unwrap_or_else(BigRational::zero)
        };
        assert_eq!(&get(NloShape::RootOnCycle), t1.coefficient(k));
        assert_eq!(&get(NloShape::WhiteBranch), white.coefficient(k));
        assert_eq!(
            &(get(NloShape::ColoredBranchSame) + get(NloShape::ColoredBranchOther)),
            colored.coefficient(k)
        );
        let total: BigRational = c.by_scheme.values().cloned().sum();
        assert_eq!(total, c.rooted);
    }
    let brute: Vec<BigRational> = counts.iter().map(|c| c.rooted.clone()).collect();
    assert_eq!(brute[1..], [int(9), int(90), int(729)]);
    assert_eq!(printed.coefficients()[2..], [int(9), int(87), int(717)]);
}

#[test]
fn count_cap() {
    assert!(matches!(
        count_by_order(3, 0, 1, 7),
        Err(SykError::CapExceeded { pairs: 7, cap: 6 })
    ));
}

#[test]
fn covering_maps_read_marks() {
    let b = k33();
    let opt = optimal_pairings(&b, DEFAULT_CAP).unwrap();
    let g = covering(&b, opt.chosen()).unwrap();
    let e = (0..g.edge_count())
        .map(EdgeId)
        .find(|&e| g.edge(e).color == 2)
        .unwrap();
    let map = SykMap::from_covering(&g, &[e]).unwrap();
    assert_eq!(map.marks().len(), 1);
    assert_eq!(map.amplitude_exponent(), 1 - 1 - 1);
    let zero = (0..g.edge_count())
        .map(EdgeId)
        .find(|&e| g.edge(e).color == 0)
        .unwrap();
    assert!(matches!(
        SykMap::from_covering(&g, &[zero]),
        Err(SykError::InvalidMark(_))
    ));
}
