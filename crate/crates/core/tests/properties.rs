use hfree::bounds::{harris_bound, janson_bound, verify_bound_exact, HarrisMode, SubsetFamily};
use hfree::density::two_density;
use hfree::graph::{contains_subgraph, encode_graph6, parse_graph6, set_of};
use hfree::partition::{in_grk, mono_graph, Partition};
use hfree::sampler::wilson_interval;
use hfree::{Density, Graph};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn family() -> impl Strategy<Value = SubsetFamily> {
    (1usize..=10).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 0..5).prop_map(move |sets| SubsetFamily::new(n, sets).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_contains_itself(g in graph(8)) {
        prop_assert!(contains_subgraph(&g, &g));
    }

    #[test]
    fn containment_is_monotone(g in graph(7), h in graph(4), extra in prop::collection::vec((0usize..7, 0usize..7), 0..6)) {
        if contains_subgraph(&g, &h) {
            let mut bigger = g.clone();
            for (u, v) in extra {
                if u != v && u < g.n() && v < g.n() {
                    bigger.add_edge(u, v);
                }
            }
            prop_assert!(contains_subgraph(&bigger, &h));
        }
    }

    #[test]
    fn girth_absent_iff_forest(g in graph(9)) {
        let forest = g.edge_count() + g.components().len() == g.n();
        prop_assert_eq!(g.girth().is_none(), forest);
    }

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn mono_and_cross_edges_partition(g in graph(8), labels in prop::collection::vec(0usize..3, 8)) {
        let p = Partition::from_labels(&labels[..g.n()], 3).unwrap();
        let mono = mono_graph(&g, &p).unwrap();
        let cross = g.edges().filter(|&(u, v)| !p.is_within_class(u, v)).count();
        prop_assert_eq!(mono.edge_count() + cross, g.edge_count());
        for (u, v) in mono.edges() {
            prop_assert!(g.has_edge(u, v) && p.is_within_class(u, v));
        }
    }

    #[test]
    fn grk_zero_matches_chromatic_number(g in graph(8), r in 1usize..4) {
        prop_assert_eq!(in_grk(&g, r, 0).is_some(), g.chromatic_number() <= r);
    }

    #[test]
    fn grk_witness_is_valid(g in graph(8), r in 1usize..4, k in 0usize..3) {
        if let Some(w) = in_grk(&g, r, k) {
            let mono = mono_graph(&g, &w.partition).unwrap();
            prop_assert!(mono.max_degree() <= k);
            prop_assert_eq!(mono.max_degree(), w.mono_max_degree);
        }
    }

    #[test]
    fn two_density_at_least_whole_graph(g in graph(7)) {
        prop_assume!(g.n() >= 3 && g.edge_count() >= 1);
        let m2 = two_density::<Density>(&g).unwrap().value;
        let whole = Density::new(g.edge_count() as i64 - 1, g.n() as i64 - 2);
        prop_assert!(m2 >= whole);
        let witness = two_density::<Density>(&g).unwrap().witness;
        let w = g.induced(set_of(&witness));
        prop_assert_eq!(Density::new(w.edge_count() as i64 - 1, w.n() as i64 - 2), m2);
    }

    #[test]
    fn janson_and_harris_bracket_exact(fam in family(), m_frac in 0.0f64..=1.0, q in 0.0f64..=1.0, eta in 0.05f64..0.95) {
        let m = (m_frac * fam.omega_size as f64).round() as usize;
        let exact = verify_bound_exact(&fam, m).unwrap().to_f64().unwrap();
        prop_assert!(exact <= janson_bound(&fam, m, q).unwrap().bound + 1e-12);
        if m <= fam.omega_size / 2 {
            prop_assert!(harris_bound(&fam, m, eta, HarrisMode::Corrected).unwrap() <= exact + 1e-12);
        }
    }

    #[test]
    fn wilson_brackets_point(samples in 1u64..5000, frac in 0.0f64..=1.0) {
        let s = (frac * samples as f64).round() as u64;
        let (p, lo, hi) = wilson_interval(s, samples);
        prop_assert!(0.0 <= lo && lo <= p && p <= hi && hi <= 1.0);
    }
}
