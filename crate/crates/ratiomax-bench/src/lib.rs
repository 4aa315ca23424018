//! Shared instance builders for the benchmarks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratiomax::{FeasibleRegion, MultiRatioInstance, Ratio};

/// A general instance with wide coefficient spreads.
pub fn random_instance(
    seed: u64,
    n: usize,
    m: usize,
    region: FeasibleRegion,
) -> MultiRatioInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ratios = (0..m)
        .map(|_| {
            let a = (0..n).map(|_| rng.gen_range(0.0..2.0)).collect();
            let b = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
            Ratio::new(a, rng.gen_range(0.2..3.0), b).unwrap()
        })
        .collect();
    MultiRatioInstance::new(ratios, region).unwrap()
}

/// An instance that certifies monotone submodular, so the lazy greedy
/// path is applicable.
pub fn monotone_instance(
    seed: u64,
    n: usize,
    m: usize,
    region: FeasibleRegion,
) -> MultiRatioInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ratios = (0..m)
        .map(|_| {
            let base = rng.gen_range(0.5..2.0);
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..1.5)).collect();
            let a = b
                .iter()
                .map(|bi| base * bi * (1.0 + rng.gen_range(0.0..0.05)))
                .collect();
            let b0 = rng.gen_range(0.2..1.0) * b.iter().sum::<f64>().max(1.0) + 0.5;
            Ratio::new(a, b0, b).unwrap()
        })
        .collect();
    MultiRatioInstance::new(ratios, region).unwrap()
}
