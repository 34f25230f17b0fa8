//! Gluing enumeration, maximal sets, bounds, decompositions, series and
//! cube scores against independent counts.

use colgraph_core::fixtures::{
    cyclic_bubble, k33, melon_bubble, octahedron, six_color_bubble, six_color_conjugate,
};
use colgraph_core::random::{random_bubble, random_melonic};
use colgraph_core::{zero_score, ColoredGraph};
use colgraph_enumerate::{
    coefficients_enumerated, count_gluings, decompose, empirical_tilde_a, enumerate_gluings,
    four_cube_gluings, gluings_at, is_tree_gluing, maximal_set, melonic_cap, reachable_scores,
    rooted_melonic_count, satisfies_equation, series_solve, singular_point, theta_patterns,
    tree_like_check, verify_linear_bound, verify_singular_point, EnumError, GluingSpec, PatternSet,
    RootingMode, SeriesSpec,
};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn spec(bubbles: Vec<ColoredGraph>, b_max: usize) -> GluingSpec {
    GluingSpec::new(bubbles, b_max).unwrap()
}

#[test]
fn rooted_melonic_counts_are_fuss_catalan() {
    for k in 1..=4u64 {
        let fuss = binomial(4 * k, k) / (3 * k + 1);
        assert_eq!(rooted_melonic_count(3, k as usize), fuss);
    }
}

#[test]
fn labeled_counts_are_factorials() {
    for (b, copies) in [
        (k33(), 2),
        (octahedron(), 2),
        (melon_bubble(4), 4),
        (cyclic_bubble(4, &[1, 2], 2), 3),
    ] {
        let n = b.vertex_count() as u64 / 2;
        let s = spec(vec![b], copies).with_connected_only(false);
        let counts = count_gluings(&s).unwrap();
        for c in &counts {
            assert_eq!(c.labeled, factorial(n * c.b as u64));
            assert!(c.connected <= c.labeled);
        }
        assert_eq!(counts[0].connected, factorial(n));
        assert_eq!(
            enumerate_gluings(&s).unwrap().len() as u64,
            counts.iter().map(|c| c.labeled).sum()
        );
    }
}

#[test]
fn one_melon_glues_in_one_way() {
    let s = spec(vec![melon_bubble(3)], 1);
    let list = gluings_at(&s, 1).unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0].zero_score, 3);
    assert_eq!(count_gluings(&s).unwrap()[0].rooted, 1);
}

#[test]
fn melon_bubble_gluings_are_rooted_melonic_classes() {
    // gluings of k melon bubbles are the closed graphs whose color-0
    // complement is a union of elementary melons
    let s = spec(vec![melon_bubble(3)], 4);
    let rooted: Vec<u64> = count_gluings(&s)
        .unwrap()
        .iter()
        .map(|c| c.rooted)
        .collect();
    let unlabeled: Vec<usize> = (1..=4)
        .map(|b| {
            gluings_at(&s.clone().with_mode(RootingMode::Unlabeled), b)
                .unwrap()
                .len()
        })
        .collect();
    for (r, u) in rooted.iter().zip(&unlabeled) {
        assert!(*r as usize >= *u);
    }
    assert_eq!(rooted[0], 1);
    // two melons glue into a single rooted class
    assert_eq!(rooted[1], 1);
}

#[test]
fn rooted_edge_mode_fixes_the_first_edge() {
    let s = spec(vec![k33()], 2).with_mode(RootingMode::RootedEdge);
    for g in gluings_at(&s, 2).unwrap() {
        assert_eq!(g.matching[0], 0);
    }
    let labeled: Vec<Vec<usize>> = gluings_at(&spec(vec![k33()], 2), 2)
        .unwrap()
        .into_iter()
        .filter(|g| g.matching[0] == 0)
        .map(|g| g.matching)
        .collect();
    let rooted: Vec<Vec<usize>> = gluings_at(&s, 2)
        .unwrap()
        .into_iter()
        .map(|g| g.matching)
        .collect();
    assert_eq!(rooted, labeled);
}

#[test]
fn placement_scores_match_the_graph() {
    let s = spec(vec![k33(), octahedron()], 2).with_connected_only(false);
    for g in enumerate_gluings(&s).unwrap().iter().step_by(7) {
        assert_eq!(g.zero_score, zero_score(&g.graph));
        assert_eq!(
            g.graph.is_connected(),
            s.placement(&g.copies).unwrap().connected(&g.matching)
        );
    }
}

#[test]
fn enumeration_is_deterministic() {
    let s = spec(vec![octahedron()], 2);
    assert_eq!(
        enumerate_gluings(&s).unwrap(),
        enumerate_gluings(&s).unwrap()
    );
}

#[test]
fn the_cap_is_enforced() {
    let s = spec(vec![octahedron()], 5);
    assert!(matches!(
        enumerate_gluings(&s),
        Err(EnumError::CapExceeded { cap: 12, .. })
    ));
    assert!(GluingSpec::new(vec![], 2).is_err());
    assert!(GluingSpec::new(vec![k33(), melon_bubble(4)], 2).is_err());
}

#[test]
fn k33_maximal_set() {
    let s = spec(vec![k33()], 2);
    let set = maximal_set(&s).unwrap();
    let maxima: Vec<usize> = set.levels.iter().map(|l| l.phi0_max).collect();
    assert_eq!(maxima, vec![6, 9]);
    assert_eq!(set.levels[0].labeled, 3);
    let (_, est) = empirical_tilde_a(&s).unwrap();
    assert_eq!(est.estimate, Rational64::from_integer(3));
    assert!(est.attained_by_tree);
    let report = coefficients_enumerated(&k33(), 2).unwrap();
    assert_eq!(
        (report.tilde_a, report.a, report.s),
        (3.into(), 1.into(), 1.into())
    );
}

#[test]
fn octahedral_maximal_set() {
    let s = spec(vec![octahedron()], 2);
    let (set, est) = empirical_tilde_a(&s).unwrap();
    let maxima: Vec<usize> = set.levels.iter().map(|l| l.phi0_max).collect();
    assert_eq!(maxima, vec![8, 13]);
    assert_eq!(est.estimate, Rational64::from_integer(5));
    assert_eq!(est.tree_values, vec![8, 13]);
    assert!(est.melonic_cap >= est.estimate);
    for w in set.levels.iter().flat_map(|l| &l.witnesses) {
        assert!(is_tree_gluing(&s, w).unwrap());
    }
}

#[test]
fn two_cyclic_bubbles_beat_trees() {
    let s = spec(vec![cyclic_bubble(4, &[1, 2], 2)], 4);
    let (set, est) = empirical_tilde_a(&s).unwrap();
    assert_eq!(set.levels.len(), 4);
    assert_eq!(est.estimate, Rational64::from_integer(2));
    assert!(est.ratios.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn six_color_pair_has_a_witness_above_trees() {
    let s = spec(vec![six_color_bubble(), six_color_conjugate()], 2);
    let (set, est) = empirical_tilde_a(&s).unwrap();
    assert_eq!(set.levels[1].phi0_max, 18);
    assert_eq!(est.tree_values[1], 16);
    assert_eq!(est.estimate, Rational64::from_integer(6));
    assert!(!est.attained_by_tree);
    let w = &set.levels[1].witnesses[0];
    assert_eq!(zero_score(&w.graph), 18);
    assert!(!is_tree_gluing(&s, w).unwrap());
}

#[test]
fn melonic_bubbles_have_linear_exponent() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for d in 3..=4 {
        let colors: Vec<usize> = (1..=d).collect();
        for insertions in 1..=2 {
            let b = random_melonic(d, &colors, insertions, &mut rng);
            let p = b.vertex_count() / 2;
            let (_, est) = empirical_tilde_a(&spec(vec![b], 2)).unwrap();
            assert_eq!(
                est.estimate,
                Rational64::from_integer(((d - 1) * (p - 1)) as i64)
            );
            assert!(est.attained_by_tree);
            assert_eq!(est.estimate, est.melonic_cap);
        }
    }
}

#[test]
fn linear_bound_certificates() {
    let s = spec(vec![octahedron()], 2);
    let pass = verify_linear_bound(&s, Rational64::from_integer(5)).unwrap();
    assert!(pass.holds && pass.saturating > 0 && pass.counterexample.is_none());
    assert_eq!(
        pass.checked,
        count_gluings(&s)
            .unwrap()
            .iter()
            .map(|c| c.connected)
            .sum::<u64>()
    );
    let fail = verify_linear_bound(&s, Rational64::from_integer(4)).unwrap();
    let witness = fail.counterexample.expect("the bound fails");
    assert!(!fail.holds);
    assert_eq!(witness.bubble_count(), 1);
    assert!(is_tree_gluing(&s, &witness).unwrap());
}

#[test]
fn octahedral_maxima_decompose_into_coverings() {
    let s = spec(vec![octahedron()], 2);
    let set = maximal_set(&s).unwrap();
    let patterns = PatternSet::optimal_coverings(&s).unwrap();
    assert_eq!(patterns.len(), 3);
    let report = tree_like_check(&set, &patterns).unwrap();
    assert!(
        report.passed(),
        "{} of {} decomposed",
        report.decomposed,
        report.checked
    );
    let dec = decompose(&set.levels[1].witnesses[0].graph, &patterns)
        .unwrap()
        .unwrap();
    assert_eq!(dec.pieces.len(), 2);
    assert!(dec.additive);
}

#[test]
fn k33_maxima_need_theta_patterns() {
    let s = spec(vec![k33()], 2);
    let set = maximal_set(&s).unwrap();
    // the three optimal coverings are isomorphic
    let mut patterns = PatternSet::optimal_coverings(&s).unwrap();
    assert_eq!(patterns.len(), 1);
    let coverings_only = tree_like_check(&set, &patterns).unwrap();
    assert!(!coverings_only.passed());
    let thetas = theta_patterns(&s, &set, 2).unwrap();
    assert!(!thetas.is_empty());
    for w in &coverings_only.failures {
        assert!(thetas.contains(&w.graph));
        assert!(!is_tree_gluing(&s, w).unwrap());
        assert_eq!(w.zero_score, 9);
    }
    for w in set.levels.iter().flat_map(|l| &l.witnesses) {
        if thetas.contains(&w.graph) {
            patterns.insert(&w.graph);
        }
    }
    let report = tree_like_check(&set, &patterns).unwrap();
    assert!(report.passed());
    assert_eq!(report.checked, 8);
}

#[test]
fn non_decomposable_graphs_are_reported() {
    let s = spec(vec![six_color_bubble(), six_color_conjugate()], 2);
    let set = maximal_set(&s).unwrap();
    let patterns = PatternSet::optimal_coverings(&s).unwrap();
    let report = tree_like_check(&set, &patterns).unwrap();
    assert!(!report.passed());
}

#[test]
fn series_coefficients() {
    let fuss: SeriesSpec = "1+zG^4".parse().unwrap();
    assert_eq!(series_solve(&fuss, 4), big(&[1, 1, 4, 22, 140]));
    let octa: SeriesSpec = "G = 1 + 3zG^4".parse().unwrap();
    assert_eq!(series_solve(&octa, 3), big(&[1, 3, 36, 594]));
    let k33_series: SeriesSpec = "1+3zG^3+3z^2G^6".parse().unwrap();
    let c = series_solve(&k33_series, 6);
    assert_eq!(&c[..3], &big(&[1, 3, 30])[..]);
    assert!(satisfies_equation(&k33_series, &c));
    assert_eq!(octa.to_string(), "1+3zG^4");
    assert!("2+zG".parse::<SeriesSpec>().is_err());
    assert!("1+3G^2".parse::<SeriesSpec>().is_err());
    assert!("1+3zQ".parse::<SeriesSpec>().is_err());
}

#[test]
fn series_match_fuss_catalan_closed_form() {
    for p in 2..=5u64 {
        let s = SeriesSpec::single(1, p as usize);
        let c = series_solve(&s, 8);
        for (k, ck) in c.iter().enumerate() {
            let k = k as u64;
            assert_eq!(*ck, BigInt::from(binomial(p * k, k) / ((p - 1) * k + 1)));
        }
    }
}

#[test]
fn octahedral_singular_point() {
    let s = SeriesSpec::single(3, 4);
    let pt = singular_point(&s).unwrap();
    assert_eq!(pt.z, BigRational::new(9.into(), 256.into()));
    assert_eq!(pt.g, BigRational::new(4.into(), 3.into()));
    assert!(verify_singular_point(&s, &pt));
    let mut off = pt.clone();
    off.z += BigRational::new(1.into(), 1000.into());
    assert!(!verify_singular_point(&s, &off));
    assert!(singular_point(&"1+3zG^3+3z^2G^6".parse().unwrap()).is_none());
}

#[test]
fn cube_gluings() {
    let scores: Vec<(&str, usize)> = four_cube_gluings()
        .unwrap()
        .iter()
        .map(|c| (c.name, c.score))
        .collect();
    assert_eq!(
        scores,
        vec![
            ("4,1", 20),
            ("4,2a", 18),
            ("4,2b", 16),
            ("4,3a", 18),
            ("4,3b", 16)
        ]
    );
    // by side size and the excluded pairs it meets
    let reachable = reachable_scores().unwrap();
    assert!(!reachable.contains(&17));
    assert!(reachable.contains(&20) && reachable.contains(&16));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn zero_score_respects_the_melonic_cap(seed in any::<u64>(), d in 3usize..=4, count in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bubbles: Vec<ColoredGraph> = (0..count).map(|_| random_bubble(d, 2, &mut rng)).collect();
        let s = GluingSpec::new(bubbles.clone(), count).unwrap();
        let copies: Vec<usize> = (0..count).collect();
        let place = s.placement(&copies).unwrap();
        let mut sigma: Vec<usize> = (0..place.n()).collect();
        sigma.shuffle(&mut rng);
        let cap: Rational64 = bubbles.iter().map(melonic_cap).sum();
        let phi0 = Rational64::from_integer(place.zero_score(&sigma) as i64);
        if place.connected(&sigma) {
            prop_assert!(phi0 <= Rational64::from_integer(d as i64) + cap);
        }
        prop_assert_eq!(place.zero_score(&sigma), zero_score(&place.graph(&sigma)));
    }
}
