mod common;

use common::*;
use icp_core::colouring::{
    chromatic_number, enumerate_proper_partitions, greedy_upper_bound, Colouring, DEFAULT_CHROMATIC_BUDGET,
    DEFAULT_PARTITION_LIMIT,
};
use icp_core::families;
use icp_core::graph::Graph;
use icp_core::greedy::{decreasing_path, forced_vertices, is_almost_decreasing_path, is_decreasing_path, refined_greedy, OrderPolicy};
use icp_core::paths::{
    brute_force_induced_colourful_path, classify_path, colourful_path, find_induced_colourful_path,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for w in 1..n {
                for u in 0..w {
                    if bits[k] {
                        edges.push((u, w));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("n >= 1", |g| g.n() >= 1)
}

fn colouring_for(g: &Graph, seed: u64) -> Colouring {
    random_proper_colouring(&mut ChaCha8Rng::seed_from_u64(seed), g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let s = g.to_graph6();
        prop_assert_eq!(Graph::parse_graph6(&s).unwrap(), g);
        prop_assert_eq!(Graph::parse_graph6(&s).unwrap().to_graph6(), s);
    }

    #[test]
    fn girth_matches_cycle_enumeration(g in arb_graph(8)) {
        prop_assert_eq!(g.girth(), brute_force_girth(&g));
        prop_assert_eq!(g.is_triangle_free(), brute_force_triangle_free(&g));
        prop_assert_eq!(g.is_triangle_free(), g.girth() != Some(3));
    }

    #[test]
    fn mycielskian_counts(g in arb_nonempty_graph(9)) {
        let m = g.mycielskian().unwrap();
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(m.edge_count(), 3 * g.edge_count() + g.n());
        if g.is_triangle_free() {
            prop_assert!(m.is_triangle_free());
        }
    }

    #[test]
    fn components_are_closed(g in arb_graph(12)) {
        let blocks = g.connected_components();
        let mut owner = vec![usize::MAX; g.n()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                prop_assert_eq!(owner[v], usize::MAX);
                owner[v] = i;
            }
        }
        prop_assert!(owner.iter().all(|&o| o != usize::MAX));
        for (u, w) in g.edges() {
            prop_assert_eq!(owner[u], owner[w]);
        }
    }

    #[test]
    fn partitions_match_filtered_set_partitions(g in arb_nonempty_graph(8)) {
        let ours: Vec<_> = enumerate_proper_partitions(&g, DEFAULT_PARTITION_LIMIT)
            .unwrap()
            .map(|p| p.unwrap())
            .collect();
        let reference = brute_force_proper_partitions(&g);
        prop_assert_eq!(ours.len(), reference.len());
        for p in &ours {
            // canonical: class i starts with the smallest vertex not in earlier classes
            let firsts: Vec<_> = p.classes().iter().map(|c| c[0]).collect();
            let mut sorted = firsts.clone();
            sorted.sort_unstable();
            prop_assert_eq!(&firsts, &sorted);
            prop_assert!(p.to_colouring().is_proper(&g).unwrap());
        }
        // as restricted growth strings, identical sets in identical (lexicographic) order
        let as_rgs: Vec<Vec<usize>> = ours
            .iter()
            .map(|p| {
                let mut rgs = vec![0; g.n()];
                for (i, c) in p.classes().iter().enumerate() {
                    for &v in c { rgs[v] = i; }
                }
                rgs
            })
            .collect();
        let mut sorted_ref = reference.clone();
        sorted_ref.sort();
        let mut sorted_ours = as_rgs.clone();
        sorted_ours.sort();
        prop_assert_eq!(sorted_ours, sorted_ref);

        let chi = chromatic_number(&g, DEFAULT_CHROMATIC_BUDGET).unwrap();
        let min_classes = ours.iter().map(|p| p.class_count()).min().unwrap();
        prop_assert_eq!(chi.k, min_classes);
        prop_assert_eq!(chi.k, brute_force_chromatic(&g));
        prop_assert!(chi.witness.is_proper(&g).unwrap());
        prop_assert!(greedy_upper_bound(&g).0 >= chi.k);
    }

    #[test]
    fn refined_greedy_invariants(g in arb_nonempty_graph(10), seed in any::<u64>()) {
        let beta = colouring_for(&g, seed);
        let chi = chromatic_number(&g, DEFAULT_CHROMATIC_BUDGET).unwrap().k;
        for policy in [OrderPolicy::AscendingIndex, OrderPolicy::SeededShuffle(seed)] {
            let alpha = refined_greedy(&g, &beta, policy).unwrap();
            prop_assert!(alpha.as_colouring().is_proper(&g).unwrap());
            let max = alpha.max_label();
            prop_assert!(max as usize >= chi);
            for l in 1..=max {
                prop_assert!(alpha.labels().contains(&l));
            }
            for v in 0..g.n() {
                prop_assert!(alpha.label(v) as usize <= g.degree(v) + 1);
                for i in 1..alpha.label(v) {
                    prop_assert!(g.neighbours(v).any(|u| alpha.label(u) == i && beta.colour(u) < beta.colour(v)));
                }
                let forced = forced_vertices(&g, &beta, &alpha, v).unwrap();
                prop_assert!(forced.contains(&v));
                for i in 1..=alpha.label(v) {
                    prop_assert!(forced.iter().any(|&u| alpha.label(u) == i));
                }
            }
            // processing order is grouped by ascending colour
            let colours: Vec<u32> = alpha.order().iter().map(|&v| beta.colour(v)).collect();
            prop_assert!(colours.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn every_decreasing_subset_path(g in arb_nonempty_graph(9), seed in any::<u64>()) {
        let beta = colouring_for(&g, seed);
        let alpha = refined_greedy(&g, &beta, OrderPolicy::SeededShuffle(seed ^ 0x9e37)).unwrap();
        for v in 0..g.n() {
            let below = alpha.label(v) - 1;
            for mask in 0u32..(1 << below) {
                let x: Vec<u32> = (1..=below).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let p = decreasing_path(&g, &beta, &alpha, v, &x).unwrap();
                prop_assert!(is_decreasing_path(&g, &beta, &alpha, p.vertices()));
                prop_assert!(is_almost_decreasing_path(&g, &beta, &alpha, p.vertices()));
                let mut labels: Vec<u32> = p.vertices()[1..].iter().map(|&u| alpha.label(u)).collect();
                labels.sort_unstable();
                prop_assert_eq!(labels, x);
            }
        }
    }

    #[test]
    fn colourful_path_has_chi_vertices(g in arb_nonempty_graph(10), seed in any::<u64>()) {
        let beta = colouring_for(&g, seed);
        let cp = colourful_path(&g, &beta, OrderPolicy::AscendingIndex, DEFAULT_CHROMATIC_BUDGET).unwrap();
        prop_assert_eq!(cp.path.len(), cp.chromatic);
        let class = classify_path(&g, &beta, cp.path.vertices()).unwrap();
        prop_assert!(class.colourful);
        let colours = cp.path.colours(&beta);
        prop_assert!(colours.windows(2).all(|w| w[0] > w[1]));
        if g.girth().is_none_or(|gi| gi > cp.chromatic) {
            prop_assert!(class.induced);
        }
    }

    #[test]
    fn search_agrees_with_oracle(g in arb_nonempty_graph(7), seed in any::<u64>(), target in 1usize..8) {
        let beta = colouring_for(&g, seed);
        let found = find_induced_colourful_path(&g, &beta, target).unwrap();
        let oracle = brute_force_induced_colourful_path(&g, &beta, target).unwrap();
        prop_assert_eq!(found.is_some(), oracle.is_some());
        if let Some(p) = found {
            let class = classify_path(&g, &beta, p.vertices()).unwrap();
            prop_assert!(class.colourful && class.induced);
            prop_assert_eq!(p.len(), target);
        }
    }
}

#[test]
fn mycielskian_of_k2_is_c5() {
    let m = families::complete(2).unwrap().mycielskian().unwrap();
    assert!(isomorphic(&m, &families::cycle(5).unwrap()));
}

#[test]
fn mycielskian_of_single_vertex() {
    let m = Graph::empty(1).unwrap().mycielskian().unwrap();
    // vertex 0 isolated, its shadow 1 joined to the apex 2
    assert_eq!(m.edges().collect::<Vec<_>>(), vec![(1, 2)]);
}

#[test]
fn mycielski_tower_raises_chromatic_number() {
    for d in 0..=3 {
        let g = families::mycielski_tower(d).unwrap();
        assert!(g.is_triangle_free());
        assert_eq!(chromatic_number(&g, DEFAULT_CHROMATIC_BUDGET).unwrap().k, d + 2);
    }
}

#[test]
fn grotzsch_girth_by_enumeration() {
    assert_eq!(brute_force_girth(&families::grotzsch()), Some(4));
    assert!(brute_force_triangle_free(&families::grotzsch()));
}

#[test]
fn c5_partition_count_by_filter() {
    assert_eq!(all_set_partitions(5).len(), 52);
    assert_eq!(brute_force_proper_partitions(&families::cycle(5).unwrap()).len(), 11);
    assert_eq!(brute_force_proper_partitions(&families::path(3).unwrap()).len(), 2);
}

#[test]
fn connected_file_matches_known_counts() {
    let graphs = connected_le8();
    let mut by_n = [0usize; 9];
    for g in &graphs {
        assert!(g.is_connected());
        by_n[g.n()] += 1;
    }
    assert_eq!(by_n, [0, 1, 1, 2, 6, 21, 112, 853, 11117]);
}
