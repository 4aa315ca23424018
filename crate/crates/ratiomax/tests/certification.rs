//! Cross-checks between the certification routes on seeded corpora.
//! The acceptance suite in the CLI crate runs the full-size versions;
//! these keep the core crate honest on its own.

mod common;

use rand::Rng;

use common::{random_positive_b0, random_ratio, random_region, rng};
use ratiomax::{
    certify_ratio, check_monotone_definition, check_monotone_sufficient,
    check_monotone_unconstrained, check_near_monotone_structure, check_ratio_submodular,
    check_submodular_definition, FeasibleRegion, Ratio, Verdict, DEFAULT_TOLERANCE,
};

const TOL: f64 = DEFAULT_TOLERANCE;

#[test]
fn pairwise_scan_agrees_with_definition_scan() {
    let mut submodular = 0;
    let mut not_submodular = 0;
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=8usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = random_region(&mut r, n, seed as usize);

        let pairwise = check_ratio_submodular(&ratio, &region, TOL).unwrap();
        let definition =
            check_submodular_definition(|s| ratio.evaluate(s), &region, n, TOL).unwrap();
        assert_eq!(
            pairwise.verdict, definition.verdict,
            "verdicts diverge at seed {seed} over {region}"
        );
        match pairwise.verdict {
            Verdict::Submodular => submodular += 1,
            Verdict::NotSubmodular => not_submodular += 1,
            other => panic!("unexpected verdict {other} from an exact scan"),
        }
    }
    // The corpus must exercise both outcomes to mean anything.
    assert!(submodular > 0 && not_submodular > 0);
}

#[test]
fn monotone_scan_implies_submodular_scan() {
    let mut monotone = 0;
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=8usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = random_region(&mut r, n, seed as usize);

        let mono = check_monotone_definition(|s| ratio.evaluate(s), &region, n, TOL).unwrap();
        if mono.monotone {
            monotone += 1;
            let sub = check_submodular_definition(|s| ratio.evaluate(s), &region, n, TOL).unwrap();
            assert!(
                sub.verdict.is_submodular(),
                "monotone ratio failed the submodularity scan at seed {seed}"
            );
        }
    }
    assert!(monotone > 0);
}

#[test]
fn verdicts_are_scale_invariant() {
    for seed in 0..100u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=7usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = random_region(&mut r, n, seed as usize);
        let gamma = r.gen_range(0.25..4.0);

        let scaled_a = Ratio::new(
            (1..=n).map(|i| gamma * ratio.a(i)).collect(),
            ratio.b0(),
            (1..=n).map(|i| ratio.b(i)).collect(),
        )
        .unwrap();
        let scaled_b = Ratio::new(
            (1..=n).map(|i| ratio.a(i)).collect(),
            gamma * ratio.b0(),
            (1..=n).map(|i| gamma * ratio.b(i)).collect(),
        )
        .unwrap();

        let base = check_ratio_submodular(&ratio, &region, TOL)
            .unwrap()
            .verdict;
        for scaled in [&scaled_a, &scaled_b] {
            let v = check_ratio_submodular(scaled, &region, TOL)
                .unwrap()
                .verdict;
            assert_eq!(base, v, "scaling changed the verdict at seed {seed}");
        }
    }
}

#[test]
fn violation_witnesses_replay() {
    let mut replayed = 0;
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(4..=8usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = random_region(&mut r, n, seed as usize);

        let pairwise = check_ratio_submodular(&ratio, &region, TOL).unwrap();
        if pairwise.verdict == Verdict::NotSubmodular {
            let w = pairwise.witness.expect("violations carry witnesses");
            assert!(w.pairwise_slack(&ratio) < -TOL);
            replayed += 1;
        }
        let definition =
            check_submodular_definition(|s| ratio.evaluate(s), &region, n, TOL).unwrap();
        if definition.verdict == Verdict::NotSubmodular {
            let w = definition.witness.expect("violations carry witnesses");
            assert!(w.definition_slack(|s| ratio.evaluate(s)) < -TOL);
        }
    }
    assert!(replayed > 0);
}

#[test]
fn closed_form_monotonicity_matches_definition_scan_unconstrained() {
    for seed in 0..300u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=8usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);

        let closed = check_monotone_unconstrained(&ratio, TOL);
        let scan = check_monotone_definition(
            |s| ratio.evaluate(s),
            &FeasibleRegion::Unconstrained,
            n,
            TOL,
        )
        .unwrap();
        assert_eq!(closed, scan.monotone, "closed form diverged at seed {seed}");
    }
}

// Forward direction: the closed form over 2^N implies the bound test.
#[test]
fn closed_form_implies_sufficient_bound() {
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=8usize);
        let ratio = common::near_monotone_ratio(&mut r, n);
        if check_monotone_unconstrained(&ratio, TOL) {
            let report =
                check_monotone_sufficient(&ratio, &FeasibleRegion::Unconstrained, TOL).unwrap();
            assert_eq!(report.verdict, Verdict::MonotoneSubmodular);
        }
    }
}

// Certified-submodular ratios are monotone once the smallest-ratio item
// is pinned inside (or excluded but insertable), over the unconstrained
// and cardinality families.
#[test]
fn near_monotone_structure_of_certified_ratios() {
    let mut certified = 0;
    for seed in 0..400u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=8usize);
        let b0 = random_positive_b0(&mut r);
        let ratio = random_ratio(&mut r, n, b0);
        let region = if seed % 2 == 0 {
            FeasibleRegion::Unconstrained
        } else {
            FeasibleRegion::Cardinality(r.gen_range(1..=n))
        };
        let report = check_ratio_submodular(&ratio, &region, TOL).unwrap();
        if report.verdict.is_submodular() {
            certified += 1;
            assert!(
                check_near_monotone_structure(&ratio, &region, &report, TOL).unwrap(),
                "structure check failed for a certified ratio at seed {seed}"
            );
        }
    }
    assert!(certified > 0);
}

#[test]
fn ladder_matches_exact_scans_on_small_instances() {
    for seed in 0..200u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=7usize);
        let b0 = if seed % 4 == 0 {
            0.0
        } else {
            random_positive_b0(&mut r)
        };
        let ratio = random_ratio(&mut r, n, b0);
        let region = random_region(&mut r, n, seed as usize);
        let ladder = certify_ratio(&ratio, &region, TOL);
        let definition =
            check_submodular_definition(|s| ratio.evaluate(s), &region, n, TOL).unwrap();
        // The ladder may upgrade to MonotoneSubmodular but must agree
        // on the submodular/not-submodular split at these sizes.
        assert_eq!(
            ladder.verdict.is_submodular(),
            definition.verdict.is_submodular(),
            "ladder and definition scan diverge at seed {seed}"
        );
    }
}

// Monotone-certified ratios also pass the exact pairwise scan.
#[test]
fn monotone_certified_ratios_pass_the_pairwise_scan() {
    let mut certified = 0;
    for seed in 0..150u64 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=8usize);
        let ratio = common::near_monotone_ratio(&mut r, n);
        let region = random_region(&mut r, n, seed as usize);
        let mono = check_monotone_sufficient(&ratio, &region, TOL).unwrap();
        if mono.verdict != Verdict::MonotoneSubmodular {
            continue;
        }
        certified += 1;
        let pairwise = check_ratio_submodular(&ratio, &region, TOL).unwrap();
        assert_eq!(
            pairwise.verdict,
            Verdict::Submodular,
            "monotone-certified ratio failed the pairwise scan at seed {seed}"
        );
    }
    assert!(certified > 0);
}
