//! Boundaries, melonic detection, simplex counts, validation and the `.gem`
//! format.

use colgraph_core::fixtures::{cyclic_bubble, k33, melon, melon_bubble, quartic_melonic};
use colgraph_core::random::{random_closed, random_melonic};
use colgraph_core::{
    boundary_graph, euler_check_3d, gurau_degree, is_melonic, parse, serialize, simplex_census,
    validate, ColoredGraph, EdgeId, GraphError, RegularityClass, VertexId,
};
use itertools::Itertools;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn melon_minus_one_zero_edge() -> ColoredGraph {
    let g = melon(3);
    let e = g.edge_at(VertexId(0), 0).unwrap();
    g.without_edges(&[e].into_iter().collect()).0
}

#[test]
fn validation_classes() {
    let r = validate(&melon(3));
    assert_eq!(r.class, RegularityClass::Closed);
    assert!(r.connected && r.is_valid());
    let r = validate(&k33());
    assert_eq!(r.class, RegularityClass::Bubble);
    assert!(r.connected);
    let mut marked = melon(3);
    marked
        .mark_edge(marked.edge_at(VertexId(0), 0).unwrap())
        .unwrap();
    assert_eq!(validate(&marked).class, RegularityClass::Boundary { q: 1 });
    assert_eq!(
        validate(&melon_minus_one_zero_edge()).class,
        RegularityClass::Bubble
    );
    let mut partial = ColoredGraph::with_halves(2, 1);
    partial.add_edge(VertexId(0), VertexId(1), 1).unwrap();
    assert_eq!(validate(&partial).class, RegularityClass::Irregular);
}

#[test]
fn boundary_of_melon_minus_an_edge_is_the_melon_bubble() {
    let b = boundary_graph(&melon_minus_one_zero_edge()).unwrap();
    assert_eq!(b.graph.vertex_count(), 2);
    assert!(is_melonic(&b.graph).melonic);
    assert_eq!(b.graph.colors_present(), vec![1, 2, 3]);
    assert_eq!(
        colgraph_core::canonical_form(&b.graph),
        colgraph_core::canonical_form(&melon_bubble(3))
    );
}

#[test]
fn closed_graph_has_empty_boundary() {
    let b = boundary_graph(&melon(3)).unwrap();
    assert_eq!(b.graph.vertex_count(), 0);
}

#[test]
fn marked_edges_open_the_boundary() {
    let mut g = melon(3);
    g.mark_edge(EdgeId(0)).unwrap();
    assert_eq!(boundary_graph(&g).unwrap().graph.vertex_count(), 2);
}

#[test]
fn two_missing_edges_give_a_regular_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let g = random_closed(3, 4, &mut rng);
        let zeros: Vec<EdgeId> = (0..g.edge_count())
            .map(EdgeId)
            .filter(|&e| g.edge(e).color == 0)
            .take(2)
            .collect();
        let open = g.without_edges(&zeros.into_iter().collect()).0;
        let b = boundary_graph(&open).unwrap().graph;
        assert_eq!(b.vertex_count(), 4);
        b.require_regular(&[1, 2, 3]).unwrap();
    }
}

#[test]
fn melonic_detection_on_fixtures() {
    assert!(is_melonic(&melon(3)).melonic);
    assert!(!is_melonic(&k33()).melonic);
    let quartic = quartic_melonic(3, 1);
    let w = is_melonic(&quartic);
    assert!(w.melonic);
    assert_eq!(w.canonical_pairing.unwrap().len(), 2);
    assert!(is_melonic(&cyclic_bubble(3, &[1], 2)).melonic);
    assert!(!is_melonic(&cyclic_bubble(4, &[1, 2], 2)).melonic);
}

/// Every closed `D = 3` graph with `2n` vertices, color 0 fixed to the
/// identity (this covers all isomorphism classes).
fn all_closed_d3(n: usize) -> impl Iterator<Item = ColoredGraph> {
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let id: Vec<usize> = (0..n).collect();
    let ps = perms.clone();
    perms.into_iter().flat_map(move |p1| {
        let ps = ps.clone();
        let id = id.clone();
        ps.clone().into_iter().flat_map(move |p2| {
            let (p1, id) = (p1.clone(), id.clone());
            ps.clone().into_iter().map(move |p3| {
                ColoredGraph::from_permutations(
                    3,
                    &[0, 1, 2, 3],
                    &[id.clone(), p1.clone(), p2.clone(), p3],
                )
                .unwrap()
            })
        })
    })
}

#[test]
fn melonic_iff_degree_zero_up_to_eight_vertices() {
    let mut melonic_count = 0;
    for n in 1..=4 {
        for g in all_closed_d3(n).filter(|g| g.is_connected()) {
            let zero = gurau_degree(&g).unwrap() == Rational64::from_integer(0);
            let mel = is_melonic(&g).melonic;
            assert_eq!(zero, mel);
            melonic_count += usize::from(mel);
        }
    }
    assert!(melonic_count > 0);
}

#[test]
fn census_of_melon_and_manifold_checks() {
    let c = simplex_census(&melon(3)).unwrap();
    assert_eq!(c.counts, vec![4, 6, 4, 2]);
    assert!(euler_check_3d(&melon(3)).unwrap());
    // K33 covered monochromatically: color 0 parallel to color 1
    let b = k33();
    let mut g = b.clone();
    for e in b.edges().iter().filter(|e| e.color == 1) {
        g.add_edge(e.black, e.white, 0).unwrap();
    }
    assert!(!euler_check_3d(&g).unwrap());
    assert!(matches!(
        euler_check_3d(&melon(4)),
        Err(GraphError::WrongDimension { .. })
    ));
}

#[test]
fn census_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let g = random_closed(4, 3, &mut rng);
        let c = simplex_census(&g).unwrap();
        assert_eq!(c.counts[4], g.vertex_count());
        assert_eq!(c.counts[3], g.edge_count());
        assert_eq!(c.counts[2], colgraph_core::score(&g));
    }
}

proptest! {
    #[test]
    fn melonic_graphs_are_three_manifolds(seed in any::<u64>(), k in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_melonic(3, &[0, 1, 2, 3], k, &mut rng);
        prop_assert!(is_melonic(&g).melonic);
        prop_assert_eq!(simplex_census(&g).unwrap().euler_sum(), 0);
        prop_assert!(euler_check_3d(&g).unwrap());
    }

    #[test]
    fn gem_round_trip(seed in any::<u64>(), n in 1usize..6, marks in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = random_closed(3, n, &mut rng);
        let zeros: Vec<EdgeId> = (0..g.edge_count()).map(EdgeId).filter(|&e| g.edge(e).color == 0).collect();
        for &e in zeros.iter().take(marks) {
            g.mark_edge(e).unwrap();
        }
        let text = serialize(&g);
        let h = parse(&text).unwrap();
        prop_assert_eq!(&g, &h);
        prop_assert_eq!(serialize(&h), text);
    }
}
