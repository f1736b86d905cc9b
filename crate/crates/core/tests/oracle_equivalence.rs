use isbdd::constraints::{build, independent_set_bdd, kernel_bdd, ConstraintMode};
use isbdd::graph::{random_average_degree, random_regular_with, rng_from_seed, Graph, RegularStrategy};
use isbdd::oracle::{brute_count, enumerate_sets};
use num_bigint::BigUint;
use proptest::prelude::*;

fn graphs(seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in (4..=16).step_by(2) {
        for strategy in [RegularStrategy::Greedy, RegularStrategy::Pairing] {
            out.push(random_regular_with(n, 3, strategy, &mut rng_from_seed(seed ^ n as u64)).unwrap());
        }
        out.push(random_average_degree(n, 3, seed.wrapping_add(n as u64)).unwrap());
    }
    out
}

#[test]
fn figure_seven_graph() {
    let g = Graph::from_edge_list(
        6,
        [(1, 2), (1, 5), (1, 6), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5), (5, 6)],
    )
    .unwrap();
    assert_eq!(brute_count(&g, ConstraintMode::IndependentSet).unwrap(), 14u32.into());
    assert_eq!(independent_set_bdd(&g).count_solutions().unwrap(), 14u32.into());
    let sets = enumerate_sets(&g, ConstraintMode::IndependentSet).unwrap();
    assert_eq!(
        sets,
        vec![
            vec![],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![5],
            vec![6],
            vec![1, 3],
            vec![1, 4],
            vec![2, 3],
            vec![2, 6],
            vec![3, 4],
            vec![4, 6],
            vec![1, 3, 4],
        ]
    );
}

#[test]
fn k33_kernels() {
    let mut e = Vec::new();
    for u in [1, 3, 5] {
        for v in [2, 4, 6] {
            e.push((u, v));
        }
    }
    let g = Graph::from_edge_list(6, e).unwrap();
    assert_eq!(brute_count(&g, ConstraintMode::Kernel).unwrap(), 2u32.into());
    assert_eq!(
        enumerate_sets(&g, ConstraintMode::Kernel).unwrap(),
        vec![vec![1, 3, 5], vec![2, 4, 6]]
    );
}

#[test]
fn two_hundred_graphs_per_ensemble_and_mode() {
    let mut checked = 0;
    for seed in 0..200u64 {
        for g in graphs(seed * 7919) {
            for mode in [ConstraintMode::IndependentSet, ConstraintMode::Kernel] {
                let oracle = brute_count(&g, mode).unwrap();
                assert_eq!(build(&g, mode).count_solutions().unwrap(), oracle, "{mode} on\n{g}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 200 * 3 * 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn structural_properties(seed in any::<u64>(), n in 1usize..=12, d in 1usize..=4) {
        prop_assume!((n * d) % 2 == 0 && d < n);
        let g = random_average_degree(n, d, seed).unwrap();
        let is = independent_set_bdd(&g).count_solutions().unwrap();
        let k = kernel_bdd(&g);
        let kc = k.count_solutions().unwrap();
        prop_assert!(is >= BigUint::from(n + 1));
        prop_assert!(kc >= BigUint::from(1u32));
        // the empty set is never a kernel of a nonempty graph
        prop_assert!(!k.eval(&vec![false; n]));
        let both = k.and(&independent_set_bdd(&g)).unwrap();
        prop_assert_eq!(both.count_solutions().unwrap(), kc.clone());

        let kernels = enumerate_sets(&g, ConstraintMode::Kernel).unwrap();
        prop_assert_eq!(BigUint::from(kernels.len()), kc);
        for set in &kernels {
            for v in g.vertices().filter(|v| !set.contains(v)) {
                prop_assert!(set.iter().any(|&u| g.has_edge(u, v)), "{:?} + {} stays independent", set, v);
            }
        }
        prop_assert_eq!(
            BigUint::from(enumerate_sets(&g, ConstraintMode::IndependentSet).unwrap().len()),
            is
        );
    }
}

#[test]
fn both_six_vertex_classes_reachable() {
    let mut seen = std::collections::BTreeSet::new();
    for seed in 0..1000 {
        let g = isbdd::graph::random_regular(6, 3, seed).unwrap();
        let c: u64 = independent_set_bdd(&g).count_solutions().unwrap().try_into().unwrap();
        seen.insert(c);
    }
    assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![13, 15]);
}
