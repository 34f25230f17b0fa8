//! Scores, degrees and jackets checked against permutation-based oracles.

use colgraph_core::fixtures::{
    bipyramid, k33, melon, octahedron, quartic_melonic, with_identity_color0,
};
use colgraph_core::random::{random_closed, random_graph, random_melonic};
use colgraph_core::{
    bicolored_cycles, degree_from_jackets, gurau_degree, jackets, pair_counts, score,
    weighted_score, zero_score, ColoredGraph, GraphError, VertexId,
};
use num_rational::Rational64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Cycle count of `p_j^{-1} ∘ p_i` on black indices, computed directly.
fn oracle_pair(maps: &[Vec<Option<usize>>], i: usize, j: usize) -> usize {
    let n = maps[i].len();
    let mut inv_j = vec![0; n];
    for (b, w) in maps[j].iter().enumerate() {
        inv_j[w.unwrap()] = b;
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = inv_j[maps[i][x].unwrap()];
            }
        }
    }
    count
}

fn oracle_score(g: &ColoredGraph) -> usize {
    let maps = g.color_maps();
    let colors = g.colors_present();
    let mut total = 0;
    for (a, &i) in colors.iter().enumerate() {
        for &j in &colors[a + 1..] {
            total += oracle_pair(&maps, i, j);
        }
    }
    total
}

#[test]
fn melon_scores() {
    let g = melon(3);
    assert_eq!(score(&g), 6);
    assert_eq!(zero_score(&g), 3);
    assert_eq!(gurau_degree(&g).unwrap(), Rational64::from_integer(0));
    for i in 0..=3 {
        for j in (i + 1)..=3 {
            assert_eq!(bicolored_cycles(&g, i, j).unwrap().count, 1);
        }
    }
}

#[test]
fn four_vertex_melonic_score_matches_direct_count() {
    // melon with one parallel pair inserted on its color-1 edge
    let g = ColoredGraph::from_permutations(
        3,
        &[0, 1, 2, 3],
        &[vec![0, 1], vec![1, 0], vec![0, 1], vec![0, 1]],
    )
    .unwrap();
    assert_eq!(score(&g), oracle_score(&g));
    assert_eq!(score(&g), 9);
    assert_eq!(score(&g) as i64, 3 + 3 * 2 * 4 / 4);
}

#[test]
fn k33_has_one_cycle_per_pair() {
    let g = k33();
    assert!(pair_counts(&g).values().all(|&c| c == 1));
    assert_eq!(score(&g), 3);
}

#[test]
fn bipyramid_scores() {
    for p in 2..=5 {
        let g = bipyramid(p);
        assert_eq!(score(&g), 2 * (p + 1));
        assert_eq!(score(&g), oracle_score(&g));
    }
}

#[test]
fn k33_as_two_dimensional_graph_has_degree_two() {
    let g = k33().relabel_colors(2, &[0, 0, 1, 2]).unwrap();
    assert_eq!(gurau_degree(&g).unwrap(), Rational64::from_integer(2));
    let js = jackets(&g).unwrap();
    assert_eq!(js.len(), 1);
    assert_eq!(js[0].genus, 1);
}

#[test]
fn bicolored_cycles_errors() {
    let g = melon(2);
    assert_eq!(bicolored_cycles(&g, 1, 1), Err(GraphError::SameColor(1)));
    assert!(matches!(
        bicolored_cycles(&g, 0, 5),
        Err(GraphError::ColorOutOfRange { .. })
    ));
}

#[test]
fn open_paths_are_not_counted() {
    let mut g = melon(2);
    let e = g.edge_at(VertexId(0), 0).unwrap();
    g.mark_edge(e).unwrap();
    assert_eq!(zero_score(&g), 0);
    assert_eq!(score(&g), 1);
}

#[test]
fn weighted_score_with_no_exclusion_is_the_score() {
    let g = with_identity_color0(&octahedron());
    assert_eq!(weighted_score(&g, &[]).unwrap(), score(&g));
    assert_eq!(
        weighted_score(&g, &[(1, 2)]).unwrap(),
        score(&g) - bicolored_cycles(&g, 1, 2).unwrap().count
    );
    assert!(weighted_score(&g, &[(1, 9)]).is_err());
}

#[test]
fn disconnected_graph_has_no_degree() {
    let g = melon(3).disjoint_union(&melon(3)).unwrap();
    assert_eq!(gurau_degree(&g), Err(GraphError::Disconnected));
}

#[test]
fn jacket_counts_and_faces() {
    let g = melon(3);
    assert_eq!(jackets(&g).unwrap().len(), 3);
    assert_eq!(jackets(&melon(4)).unwrap().len(), 12);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = random_closed(3, 4, &mut rng);
    let counts = pair_counts(&g);
    for j in jackets(&g).unwrap() {
        let c = j.order.len();
        let faces: usize = (0..c)
            .map(|k| {
                let (a, b) = (j.order[k], j.order[(k + 1) % c]);
                counts[&(a.min(b), a.max(b))]
            })
            .sum();
        assert_eq!(j.map.face_count(), faces);
    }
}

#[test]
fn melonic_graphs_have_planar_jackets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let g = random_melonic(3, &[0, 1, 2, 3], 4, &mut rng);
        assert!(jackets(&g).unwrap().iter().all(|j| j.genus == 0));
        assert_eq!(gurau_degree(&g).unwrap(), Rational64::from_integer(0));
    }
}

#[test]
fn optimal_bipyramid_covering_has_a_planar_jacket() {
    // color-0 edges parallel to the color-3 rungs
    let b = bipyramid(3);
    let mut g = b.clone();
    for e in b.edges().iter().filter(|e| e.color == 3) {
        g.add_edge(e.black, e.white, 0).unwrap();
    }
    assert_eq!(zero_score(&g), 12);
    assert!(jackets(&g).unwrap().iter().any(|j| j.genus == 0));
}

#[test]
fn quartic_melonic_scores() {
    for d in 3..=5 {
        let b = quartic_melonic(d, 1);
        assert_eq!(score(&b), oracle_score(&b));
    }
}

proptest! {
    #[test]
    fn degree_equals_jacket_formula(seed in any::<u64>(), d in 3usize..=4, n in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_closed(d, n, &mut rng);
        let deg = gurau_degree(&g).unwrap();
        prop_assert!(deg.is_integer() && deg >= Rational64::from_integer(0));
        prop_assert_eq!(deg, degree_from_jackets(&jackets(&g).unwrap(), d + 1));
    }

    #[test]
    fn score_matches_oracle(seed in any::<u64>(), d in 2usize..=5, n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let colors: Vec<usize> = (0..=d).collect();
        let g = random_graph(d, &colors, n, &mut rng);
        prop_assert_eq!(score(&g), oracle_score(&g));
        prop_assert!(zero_score(&g) <= score(&g));
        let sum: usize = pair_counts(&g).values().sum();
        prop_assert_eq!(sum, score(&g));
    }

    #[test]
    fn two_dimensional_euler_relation(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_closed(2, n, &mut rng);
        let genus = jackets(&g).unwrap()[0].genus as i64;
        let lhs = score(&g) as i64 - g.edge_count() as i64 + g.vertex_count() as i64;
        prop_assert_eq!(lhs, 2 - 2 * genus);
    }
}
