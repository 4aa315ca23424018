//! Solver cross-checks: greedy against brute force, the lazy variant
//! against the plain one, and the parametric single-ratio maximizer
//! against enumeration.

mod common;

use rand::Rng;

use common::{near_monotone_instance, random_positive_b0, random_ratio, random_region, rng};
use ratiomax::{
    brute_force_maximize, certify_instance, greedy_maximize, guarantee_for, lazy_greedy_maximize,
    single_ratio_max_with_trace, FeasibleRegion, MultiRatioInstance, Ratio, Subset, Verdict,
    DEFAULT_TOLERANCE,
};

const TOL: f64 = DEFAULT_TOLERANCE;

#[test]
fn greedy_meets_the_guarantee_on_monotone_cardinality_instances() {
    let factor = 1.0 - (-1.0f64).exp();
    for seed in 0..100u64 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=12usize);
        let m = r.gen_range(1..=3usize);
        let p = r.gen_range(1..=n);
        let inst = near_monotone_instance(&mut r, n, m, FeasibleRegion::Cardinality(p));

        let cert = certify_instance(&inst, TOL);
        assert_eq!(
            cert.aggregate.verdict,
            Verdict::MonotoneSubmodular,
            "construction should certify monotone at seed {seed}"
        );
        let bound = guarantee_for(&inst, &cert).expect("monotone + cardinality carries a bound");
        assert!((bound.factor() - factor).abs() < 1e-12);

        let trace = greedy_maximize(&inst);
        let exact = brute_force_maximize(&inst).unwrap();
        assert!(
            trace.final_value >= factor * exact.value - 1e-9,
            "guarantee violated at seed {seed}: {} < {factor} * {}",
            trace.final_value,
            exact.value
        );
        assert!(trace.best_prefix_value >= trace.final_value);
    }
}

#[test]
fn greedy_traces_are_nondecreasing_on_monotone_instances() {
    for seed in 0..100u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=10usize);
        let m = r.gen_range(1..=3usize);
        let region = random_region(&mut r, n, seed as usize);
        let inst = near_monotone_instance(&mut r, n, m, region);
        let cert = certify_instance(&inst, TOL);
        if cert.aggregate.verdict != Verdict::MonotoneSubmodular {
            continue;
        }
        let trace = greedy_maximize(&inst);
        let mut last = 0.0;
        for step in &trace.steps {
            assert!(
                step.value >= last - 1e-12,
                "monotone trace decreased at seed {seed}"
            );
            last = step.value;
        }
    }
}

#[test]
fn lazy_greedy_equals_plain_greedy_on_certified_instances() {
    let mut compared = 0;
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=10usize);
        let m = r.gen_range(1..=3usize);
        let region = random_region(&mut r, n, seed as usize);
        let ratios: Vec<Ratio> = (0..m)
            .map(|_| {
                let b0 = random_positive_b0(&mut r);
                random_ratio(&mut r, n, b0)
            })
            .collect();
        let inst = MultiRatioInstance::new(ratios, region).unwrap();
        let cert = certify_instance(&inst, TOL);
        if !cert.aggregate.verdict.is_submodular() {
            continue;
        }
        compared += 1;
        let lazy = lazy_greedy_maximize(&inst, &cert).unwrap();
        let plain = greedy_maximize(&inst);
        assert_eq!(lazy, plain, "lazy and plain greedy diverge at seed {seed}");
    }
    assert!(compared > 0);
}

#[test]
fn greedy_is_permutation_invariant() {
    for seed in 0..100u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=10usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let p = r.gen_range(1..=n);
        let inst =
            MultiRatioInstance::new(vec![ratio.clone()], FeasibleRegion::Cardinality(p)).unwrap();

        // Random relabeling: position i holds old item perm[i].
        let mut perm: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let relabeled = Ratio::new(
            perm.iter().map(|&old| ratio.a(old)).collect(),
            ratio.b0(),
            perm.iter().map(|&old| ratio.b(old)).collect(),
        )
        .unwrap();
        let relabeled_inst =
            MultiRatioInstance::new(vec![relabeled], FeasibleRegion::Cardinality(p)).unwrap();

        let base: Subset = greedy_maximize(&inst).final_set;
        let mapped_back: Subset = greedy_maximize(&relabeled_inst)
            .final_set
            .iter()
            .map(|new| perm[new - 1])
            .collect();
        assert_eq!(
            base, mapped_back,
            "relabeling changed the solution at seed {seed}"
        );
    }
}

#[test]
fn parametric_max_matches_brute_force() {
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=12usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = if seed % 2 == 0 {
            FeasibleRegion::Unconstrained
        } else {
            FeasibleRegion::Cardinality(r.gen_range(1..=n))
        };
        let (res, lambdas) = single_ratio_max_with_trace(&ratio, &region, TOL).unwrap();
        for pair in lambdas.windows(2) {
            assert!(
                pair[1] > pair[0],
                "iterates not strictly increasing at seed {seed}"
            );
        }
        let inst = MultiRatioInstance::new(vec![ratio], region).unwrap();
        let exact = brute_force_maximize(&inst).unwrap();
        assert!(
            (res.value - exact.value).abs() <= 1e-9 * exact.value.abs().max(1.0),
            "parametric max missed the optimum at seed {seed}: {} vs {}",
            res.value,
            exact.value
        );
    }
}

#[test]
fn brute_force_matches_independent_enumeration() {
    for seed in 0..50u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=12usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let p = r.gen_range(1..=n);
        let inst = MultiRatioInstance::new(vec![ratio], FeasibleRegion::Cardinality(p)).unwrap();
        let res = brute_force_maximize(&inst).unwrap();

        // Independent maximum over an explicitly materialized family.
        let mut best = f64::NEG_INFINITY;
        for mask in 0..(1u64 << n) {
            let s =
                Subset::from_indices((1..=n).filter(|i| mask & (1 << (i - 1)) != 0), n).unwrap();
            if s.len() <= p {
                best = best.max(inst.objective(s));
            }
        }
        assert_eq!(res.value, best);
        assert!((inst.evaluate(res.set).unwrap() - res.value).abs() <= 1e-12 * best.abs().max(1.0));
    }
}
