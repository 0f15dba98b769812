mod common;

use kcover::connectivity::{edge_connectivity, is_k_connected, is_k_connected_on, node_connectivity};
use kcover::cover::{cover_cost_bound, min_cost_edge_cover, min_size_edge_cover, BoundCase, CostVector, CoverSpec};
use kcover::generate::{harary, random_costs, random_k_edge_connected, random_simple_k_connected};
use kcover::kcs::{algorithm1, is_forest, kcs_relaxed};
use kcover::oracle::{brute_min_cost_edge_cover, brute_opt_kcs};
use kcover::polytope::{in_frac_con, perturbed_feasible_point, scale_factor, verify_scaling, EnumerationOptions, ScaleCase};
use kcover::rational::int;
use kcover::Rational;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cover_cost_within_bound(n in 2usize..=8, k in 2usize..=4, extra in 0usize..=3, seed in 0u64..1000) {
        let g = random_k_edge_connected(n, k, extra, seed).unwrap();
        let c = random_costs(g.m(), seed);
        for l in 1..k {
            let spec = CoverSpec::new(l, false).unwrap();
            let cover = min_cost_edge_cover(&g, &c, spec).unwrap();
            let bound = cover_cost_bound(&g, &c, k, l).unwrap();
            prop_assert!(c.cost_of(&cover) <= bound.value);
            if bound.case == BoundCase::OddSmall {
                prop_assert!(bound.value <= bound.relaxed_value);
            }
            let size = min_size_edge_cover(&g, CoverSpec::new(k - 1, false).unwrap()).unwrap().len();
            prop_assert!(size <= g.m() - n / 2);
        }
    }

    #[test]
    fn solver_agrees_with_oracle(n in 2usize..=6, k in 1usize..=3, extra in 0usize..=4, seed in 0u64..1000, l in 1usize..=3) {
        let g = random_k_edge_connected(n, k, extra, seed).unwrap();
        prop_assume!(g.m() <= 16 && l <= g.min_degree());
        let spec = CoverSpec::new(l, false).unwrap();
        let c = random_costs(g.m(), seed + 1);
        let (brute, _) = brute_min_cost_edge_cover(&g, &c, spec).unwrap();
        prop_assert_eq!(c.cost_of(&min_cost_edge_cover(&g, &c, spec).unwrap()), brute);
        let (brute_size, _) = brute_min_cost_edge_cover(&g, &CostVector::unit(g.m()), spec).unwrap();
        prop_assert_eq!(int(min_size_edge_cover(&g, spec).unwrap().len() as i128), brute_size);
    }

    #[test]
    fn connectivity_ordering(n in 2usize..=8, m in 1usize..=16, seed in 0u64..1000) {
        let g = common::random_multigraph(n, m, seed);
        let kappa = node_connectivity(&g).unwrap().value;
        let lambda = edge_connectivity(&g).unwrap().value;
        prop_assert!(kappa <= lambda && lambda <= g.min_degree());
    }

    #[test]
    fn algorithm1_invariants(n in 4usize..=7, k in 2usize..=4, extra in 0usize..=4, seed in 0u64..1000) {
        prop_assume!(k < n);
        let g = random_simple_k_connected(n, k, extra, seed).unwrap();
        let mut sol = algorithm1(&g, k, None).unwrap();
        let all = sol.edges();
        prop_assert!(is_k_connected_on(&g, &all, k));
        prop_assert!(is_forest(&g, &sol.augmentation));
        prop_assert!(sol.augmentation.len() < n);
        prop_assert!(sol.cover.intersection(&sol.augmentation).is_empty());
        for e in sol.augmentation.iter() {
            let mut less = all.clone();
            less.remove(e);
            prop_assert!(!is_k_connected_on(&g, &less, k));
        }
        if g.m() <= 20 {
            let (opt, _) = brute_opt_kcs(&g, k).unwrap();
            prop_assert!(sol.certify(int(opt as i128), false, n));
            let relaxed = kcs_relaxed(&g, k).unwrap();
            prop_assert!(relaxed.total_size <= opt);
        }
    }

    #[test]
    fn weighted_algorithm1_is_k_connected(n in 4usize..=7, k in 2usize..=3, seed in 0u64..1000) {
        let g = random_simple_k_connected(n, k, 3, seed).unwrap();
        let c = random_costs(g.m(), seed);
        let sol = algorithm1(&g, k, Some(&c)).unwrap();
        prop_assert!(is_k_connected_on(&g, &sol.edges(), k));
        prop_assert_eq!(sol.total_cost, Some(c.cost_of(&sol.edges())));
        prop_assert!(is_forest(&g, &sol.augmentation));
    }

    #[test]
    fn scale_factor_never_exceeds_relaxed(n in 2usize..=20, k in 2usize..=6, l in 1usize..=5, slack in 0i128..40) {
        prop_assume!(l < k);
        let total = Rational::new((k * n) as i128, 2) + Rational::new(slack, 8);
        let s = scale_factor(n, k, l, total).unwrap();
        let relaxed = Rational::new(l as i128, k as i128) + Rational::new(1, (k * n) as i128);
        prop_assert!(s.mu <= relaxed);
        prop_assert!(s.mu >= Rational::new(l as i128, k as i128));
        if s.case == ScaleCase::OddSmall {
            prop_assert_eq!(s.mu, Rational::new((l * n + 1) as i128, 2) / total);
        }
    }

    #[test]
    fn scaled_points_are_in_cover_polytope(n in 3usize..=6, k in 2usize..=3, extra in 0usize..=2, seed in 0u64..1000) {
        let g = random_k_edge_connected(n, k, extra, seed).unwrap();
        let x = perturbed_feasible_point(&g, k, seed).unwrap();
        prop_assert!(in_frac_con(&g, &x, k).unwrap().ok);
        for l in 1..k {
            let report = verify_scaling(&g, &x, k, l, &EnumerationOptions::default()).unwrap();
            prop_assert!(report.ok());
        }
    }
}

#[test]
fn harary_is_minimum_k_connected() {
    for n in 4..=6 {
        for k in 2..n {
            let g = harary(k, n).unwrap();
            assert!(is_k_connected(&g, k));
            assert_eq!(brute_opt_kcs(&g, k).unwrap().0, g.m());
        }
    }
}
