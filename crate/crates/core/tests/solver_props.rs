mod common;

use proptest::prelude::*;

use common::{adjacency, oracle_gamma, oracle_valid};
use drdf::graph::{generate, FamilySpec, Graph};
use drdf::solver::{gamma_dr, gamma_dr_naive, Domain, SolveOptions};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn matches_oracle(g in arb_graph(8)) {
        let r = gamma_dr(&g, &SolveOptions::default()).unwrap();
        prop_assert!(r.is_optimal());
        prop_assert_eq!(r.value, oracle_gamma(&g, false));
        prop_assert_eq!(r.witness.weight(), r.value);
        prop_assert!(oracle_valid(&adjacency(&g), r.witness.values()));
        prop_assert!(!r.witness.values().contains(&1));
    }

    #[test]
    fn ones_never_help(g in arb_graph(7)) {
        let with = gamma_dr(&g, &SolveOptions { allow_ones: true, ..Default::default() }).unwrap();
        let without = gamma_dr(&g, &SolveOptions::default()).unwrap();
        prop_assert_eq!(with.value, without.value);
        prop_assert_eq!(gamma_dr_naive(&g, Domain::Full).unwrap(), without.value);
    }

    #[test]
    fn within_known_bounds(g in arb_graph(9)) {
        let r = gamma_dr(&g, &SolveOptions::default()).unwrap();
        let n = g.order() as u64;
        // Each component needs weight at least 2 and at most 3 per vertex.
        prop_assert!(r.value >= 2 * g.components().len() as u64);
        prop_assert!(r.value <= 3 * n);
        if g.is_connected() {
            prop_assert!(r.value <= 2 * n + 1 - 2 * g.max_degree() as u64);
        }
    }
}

#[test]
fn node_limit_returns_a_valid_labeling() {
    let g = generate(&FamilySpec::GQ(generate(&FamilySpec::Cycle(3)).unwrap())).unwrap();
    let r = gamma_dr(
        &g,
        &SolveOptions {
            node_limit: Some(10),
            ..Default::default()
        },
    )
    .unwrap();
    assert!(!r.is_optimal());
    assert!(oracle_valid(&adjacency(&g), r.witness.values()));
    assert_eq!(r.witness.weight(), r.value);
}
