//! Seeded instance builders shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratiomax::{FeasibleRegion, MultiRatioInstance, Ratio};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A ratio with coefficients wide enough that both submodular and
/// non-submodular outcomes occur across seeds.
pub fn random_ratio(rng: &mut ChaCha8Rng, n: usize, b0: f64) -> Ratio {
    let a = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
    let b = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
    Ratio::new(a, b0, b).unwrap()
}

pub fn random_positive_b0(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(0.2..3.0)
}

/// Cycles through the three region kinds deterministically by seed.
pub fn random_region(rng: &mut ChaCha8Rng, n: usize, kind: usize) -> FeasibleRegion {
    match kind % 3 {
        0 => FeasibleRegion::Unconstrained,
        1 => FeasibleRegion::Cardinality(rng.gen_range(1..=n)),
        _ => {
            let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
            let capacity = rng.gen_range(0.3..0.8) * weights.iter().sum::<f64>();
            FeasibleRegion::Knapsack { weights, capacity }
        }
    }
}

/// A ratio whose marginal ratios are nearly flat and whose constant
/// term is large relative to the item weights; such ratios pass the
/// monotonicity bound by construction.
pub fn near_monotone_ratio(rng: &mut ChaCha8Rng, n: usize) -> Ratio {
    let base = rng.gen_range(0.5..2.0);
    let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..1.5)).collect();
    let a = b
        .iter()
        .map(|bi| base * bi * (1.0 + rng.gen_range(0.0..0.05)))
        .collect();
    let b0 = rng.gen_range(0.2..1.0) * b.iter().sum::<f64>().max(1.0) + 0.5;
    Ratio::new(a, b0, b).unwrap()
}

pub fn near_monotone_instance(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    region: FeasibleRegion,
) -> MultiRatioInstance {
    let ratios = (0..m).map(|_| near_monotone_ratio(rng, n)).collect();
    MultiRatioInstance::new(ratios, region).unwrap()
}
