mod common;

use proptest::prelude::*;

use common::{adjacency, oracle_valid};
use drdf::construct::{
    check_bound, construct_drdf, membership_e, ConstructOptions, Membership, RuleId, RuleMask,
};
use drdf::graph::{generate, FamilySpec, Graph};
use drdf::harness::{instance_rng, random_graph, RandomModel};
use drdf::solver::{gamma_dr, SolveOptions};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..100, n * (n - 1) / 2).prop_flat_map(move |coins| {
            (0u8..100).prop_map(move |p| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if coins[k] < p / 2 + 5 {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    })
}

fn arb_mask() -> impl Strategy<Value = RuleMask> {
    proptest::collection::vec(any::<bool>(), RuleId::ALL.len()).prop_map(|bits| {
        let keep: Vec<RuleId> = RuleId::ALL
            .iter()
            .zip(bits)
            .filter(|(_, b)| *b)
            .map(|(r, _)| *r)
            .collect();
        RuleMask::only(&keep)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn output_is_valid_with_consistent_trace(g in arb_graph(30), fallback_n in 0usize..14) {
        let opts = ConstructOptions { fallback_n, ..Default::default() };
        let (f, trace) = construct_drdf(&g, &opts);
        prop_assert!(oracle_valid(&adjacency(&g), f.values()));
        prop_assert_eq!(trace.removed_total(), g.order());
        prop_assert_eq!(trace.weight_total(), f.weight() as i64);
    }

    #[test]
    fn any_rule_mask_is_sound(g in arb_graph(20), rules in arb_mask()) {
        let opts = ConstructOptions { fallback_n: 0, rules, ..Default::default() };
        let (f, trace) = construct_drdf(&g, &opts);
        prop_assert!(oracle_valid(&adjacency(&g), f.values()));
        for s in &trace.steps {
            prop_assert!(rules.contains(s.rule), "{} ran while disabled", s.rule);
        }
    }

    #[test]
    fn never_below_gamma(g in arb_graph(10)) {
        let (f, _) = construct_drdf(&g, &ConstructOptions { fallback_n: 0, ..Default::default() });
        let gamma = gamma_dr(&g, &SolveOptions::default()).unwrap().value;
        prop_assert!(f.weight() >= gamma);
    }

    #[test]
    fn tadpoles_meet_the_bound(m in 3usize..60, k in 1usize..60) {
        prop_assume!(!((m == 5 || m == 7) && matches!(k, 2 | 3 | 5)));
        let g = generate(&FamilySpec::Tadpole { m, k }).unwrap();
        let (f, _) = construct_drdf(&g, &ConstructOptions::default());
        let r = check_bound(&g, &f).unwrap();
        prop_assert!(r.satisfied, "C_{{{},{}}}: weight {}", m, k, r.weight);
    }

    #[test]
    fn long_cycles_meet_the_bound(n in 8usize..500) {
        let g = generate(&FamilySpec::Cycle(n)).unwrap();
        let (f, trace) = construct_drdf(&g, &ConstructOptions::default());
        prop_assert!(11 * f.weight() <= 12 * n as u64);
        prop_assert!(!trace.fallback_used);
    }
}

#[test]
fn random_models_stay_valid() {
    for (i, model) in [RandomModel::UniformMinDeg2, RandomModel::CycleUnion, RandomModel::Family]
        .into_iter()
        .cycle()
        .take(150)
        .enumerate()
    {
        let mut rng = instance_rng(99, i as u64);
        let g = random_graph(model, 20 + i, &mut rng).unwrap();
        let (f, _) = construct_drdf(&g, &ConstructOptions::default());
        assert!(oracle_valid(&adjacency(&g), f.values()), "instance {i}");
    }
}

#[test]
fn star_of_tadpoles_in_e() {
    let g = generate(&FamilySpec::StarOfTadpoles {
        tadpoles: vec![(4, 3), (6, 2), (3, 1)],
        attached_cycles: vec![4, 9],
        identified_cycles: vec![6],
    })
    .unwrap();
    assert_eq!(membership_e(&g), Membership::InE);
    let (f, _) = construct_drdf(&g, &ConstructOptions::default());
    assert!(check_bound(&g, &f).unwrap().satisfied);
}
