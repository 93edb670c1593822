use proptest::prelude::*;

use meg_core::generators::gen_random_connected;
use meg_core::monitor::{monitors, monitors_by_counts};
use meg_core::solver::{meg_number_with, SolverConfig};
use meg_core::structure::components;
use meg_core::{all_pairs, meg_number, parse_graph, serialize_graph, structure, Graph};

/// Arbitrary simple graphs on up to `max_n` vertices.
fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(&p, _)| p);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn serialize_round_trips(g in graphs(12)) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn distance_table_invariants(g in graphs(10)) {
        let dt = all_pairs(&g, true);
        for u in g.vertices() {
            prop_assert_eq!(dt.hops(u, u), Some(0));
            prop_assert_eq!(dt.sigma(u, u).unwrap(), &1u32.into());
            for v in g.vertices() {
                prop_assert_eq!(dt.dist(u, v), dt.dist(v, u));
                prop_assert_eq!(dt.hops(u, v).is_some(), dt.sigma(u, v).unwrap() > &0u32.into());
                if let Some(d) = dt.hops(u, v) {
                    if u != v {
                        let sum: num_bigint::BigUint = g
                            .neighbors(v)
                            .iter()
                            .filter(|&&w| dt.hops(u, w) == Some(d - 1))
                            .map(|&w| dt.sigma(u, w).unwrap().clone())
                            .sum();
                        prop_assert_eq!(&sum, dt.sigma(u, v).unwrap());
                    }
                    for w in g.vertices() {
                        if let Some(d2) = dt.hops(v, w) {
                            prop_assert!(dt.hops(u, w).unwrap() <= d + d2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structure_invariants(g in graphs(10)) {
        let s = structure(&g);
        prop_assert!(s.pendant_vertices.is_subset(&s.simplicial_vertices));
        prop_assert_eq!(s.degrees.iter().sum::<usize>(), 2 * g.m());
        let base = components(&g).len();
        for &e in g.edges() {
            let after = components(&g.delete_edge(e).unwrap()).len();
            prop_assert_eq!(s.cut_edges.contains(&e), after == base + 1);
            prop_assert!(after <= base + 1);
        }
    }

    #[test]
    fn predicate_forms_agree(g in graphs(8)) {
        let dt = all_pairs(&g, true);
        for u in g.vertices() {
            for v in u + 1..g.n() {
                if dt.hops(u, v).is_none() {
                    continue;
                }
                for &e in g.edges() {
                    prop_assert_eq!(
                        monitors(&g, &dt, u, v, e).unwrap(),
                        monitors_by_counts(&g, &dt, u, v, e).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn meg_is_additive_and_bounded(g in graphs(9)) {
        let total = meg_number(&g).unwrap();
        prop_assert!(total <= g.n());
        let mut sum = 0;
        for comp in components(&g) {
            let (h, _) = g.induced(&comp);
            let part = meg_number(&h).unwrap();
            if h.m() > 0 {
                prop_assert!(part >= 2);
            }
            sum += part;
        }
        prop_assert_eq!(total, sum);
    }

    #[test]
    fn pruning_is_sound(seed in 0u64..10_000, n in 4usize..11) {
        let max_m = n * (n - 1) / 2;
        let m = n - 1 + (seed as usize % (max_m - n + 2));
        let g = gen_random_connected(n, m, seed).unwrap().graph;
        let plain = SolverConfig { use_structure_pruning: false, ..SolverConfig::default() };
        prop_assert_eq!(meg_number(&g).unwrap(), meg_number_with(&g, plain).unwrap());
    }
}
