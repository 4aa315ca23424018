//! Single hyperbolic ratios, incremental accumulators and multi-ratio
//! instances.
//!
//! A ratio evaluates a subset `S` of the ground set as
//!
//! ```text
//! h(S) = (sum_{i in S} a_i) / (b0 + sum_{i in S} b_i)
//! ```
//!
//! with nonnegative numerator coefficients, a nonnegative constant term
//! and strictly positive denominator coefficients. By convention
//! `h(∅) = 0`, which also covers the homogeneous case `b0 = 0` where
//! the quotient itself would be undefined at the empty set.

use crate::error::{Error, Result};
use crate::region::FeasibleRegion;
use crate::subset::{Subset, MAX_GROUND_SET};

/// One hyperbolic term over the ground set `{1, .., n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ratio {
    a: Vec<f64>,
    b0: f64,
    b: Vec<f64>,
}

impl Ratio {
    /// Builds a ratio, validating the coefficient sign requirements:
    /// `a_i >= 0`, `b0 >= 0` and `b_i > 0`.
    pub fn new(a: Vec<f64>, b0: f64, b: Vec<f64>) -> Result<Ratio> {
        if a.is_empty() || a.len() > MAX_GROUND_SET {
            return Err(Error::InvalidModel(format!(
                "ground set must have between 1 and {MAX_GROUND_SET} items, got {}",
                a.len()
            )));
        }
        if a.len() != b.len() {
            return Err(Error::InvalidModel(format!(
                "numerator has {} coefficients but denominator has {}",
                a.len(),
                b.len()
            )));
        }
        for (i, v) in a.iter().enumerate() {
            if !v.is_finite() || *v < 0.0 {
                return Err(Error::InvalidModel(format!(
                    "numerator coefficient a[{}] = {v} violates the nonnegativity requirement",
                    i + 1
                )));
            }
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_finite() || *v <= 0.0 {
                return Err(Error::InvalidModel(format!(
                    "denominator coefficient b[{}] = {v} violates the strict positivity requirement",
                    i + 1
                )));
            }
        }
        if !b0.is_finite() || b0 < 0.0 {
            return Err(Error::InvalidModel(format!(
                "denominator constant b0 = {b0} violates the nonnegativity requirement"
            )));
        }
        Ok(Ratio { a, b0, b })
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// `b0 = 0`: the denominator vanishes on the empty set.
    pub fn is_homogeneous(&self) -> bool {
        self.b0 == 0.0
    }

    pub fn numerator(&self) -> &[f64] {
        &self.a
    }

    pub fn denominator(&self) -> &[f64] {
        &self.b
    }

    pub fn b0(&self) -> f64 {
        self.b0
    }

    /// Numerator coefficient of item `i` (1-based).
    pub fn a(&self, i: usize) -> f64 {
        self.a[i - 1]
    }

    /// Denominator coefficient of item `i` (1-based).
    pub fn b(&self, i: usize) -> f64 {
        self.b[i - 1]
    }

    /// The marginal ratio `a_i / b_i` of item `i`.
    pub fn item_ratio(&self, i: usize) -> f64 {
        self.a[i - 1] / self.b[i - 1]
    }

    /// Smallest marginal ratio over the ground set.
    pub fn min_item_ratio(&self) -> f64 {
        (1..=self.n())
            .map(|i| self.item_ratio(i))
            .fold(f64::INFINITY, f64::min)
    }

    /// Index of the smallest marginal ratio, largest index on ties.
    pub fn min_ratio_item(&self) -> usize {
        let mut best = 1;
        for i in 2..=self.n() {
            if self.item_ratio(i) <= self.item_ratio(best) {
                best = i;
            }
        }
        best
    }

    /// Evaluates `h(S)`. The empty set evaluates to 0.
    ///
    /// `S` must be a subset of `{1, .., n}`.
    pub fn evaluate(&self, s: Subset) -> f64 {
        if s.is_empty() {
            return 0.0;
        }
        let mut num = 0.0;
        let mut den = self.b0;
        for i in s.iter() {
            num += self.a[i - 1];
            den += self.b[i - 1];
        }
        num / den
    }

    /// Starts an incremental accumulator at the empty set.
    pub fn accumulator(&self) -> RatioAccumulator<'_> {
        RatioAccumulator {
            ratio: self,
            num: 0.0,
            den: self.b0,
            members: Subset::EMPTY,
        }
    }
}

/// Running numerator/denominator sums for one ratio, supporting O(1)
/// marginal-gain queries inside the greedy loop.
#[derive(Clone, Debug)]
pub struct RatioAccumulator<'a> {
    ratio: &'a Ratio,
    num: f64,
    den: f64,
    members: Subset,
}

impl RatioAccumulator<'_> {
    pub fn members(&self) -> Subset {
        self.members
    }

    /// Running numerator `A_S`.
    pub fn numerator(&self) -> f64 {
        self.num
    }

    /// Running denominator `b0 + sum_{i in S} b_i`.
    pub fn denominator(&self) -> f64 {
        self.den
    }

    /// Current value `h(S)`, honoring the empty-set convention.
    pub fn value(&self) -> f64 {
        if self.members.is_empty() {
            0.0
        } else {
            self.num / self.den
        }
    }

    /// `h(S ∪ {j}) - h(S)` without mutating the accumulator.
    pub fn marginal_gain(&self, j: usize) -> Result<f64> {
        if self.members.contains(j) {
            return Err(Error::ItemAlreadyPresent(j));
        }
        let extended = (self.num + self.ratio.a(j)) / (self.den + self.ratio.b(j));
        Ok(extended - self.value())
    }

    /// Inserts item `j`, updating the running sums.
    pub fn extend(&mut self, j: usize) -> Result<()> {
        if self.members.contains(j) {
            return Err(Error::ItemAlreadyPresent(j));
        }
        self.num += self.ratio.a(j);
        self.den += self.ratio.b(j);
        self.members.insert(j);
        Ok(())
    }
}

/// A sum of ratios over a common ground set, together with the feasible
/// region the maximization ranges over.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiRatioInstance {
    n: usize,
    ratios: Vec<Ratio>,
    region: FeasibleRegion,
}

impl MultiRatioInstance {
    pub fn new(ratios: Vec<Ratio>, region: FeasibleRegion) -> Result<MultiRatioInstance> {
        let Some(first) = ratios.first() else {
            return Err(Error::InvalidModel(
                "instance needs at least one ratio".into(),
            ));
        };
        let n = first.n();
        if ratios.iter().any(|r| r.n() != n) {
            return Err(Error::InvalidModel(
                "all ratios must share the same ground set size".into(),
            ));
        }
        region.validate(n)?;
        Ok(MultiRatioInstance { n, ratios, region })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_ratios(&self) -> usize {
        self.ratios.len()
    }

    pub fn ratios(&self) -> &[Ratio] {
        &self.ratios
    }

    pub fn ratio(&self, k: usize) -> &Ratio {
        &self.ratios[k]
    }

    pub fn region(&self) -> &FeasibleRegion {
        &self.region
    }

    /// Objective value of a feasible set.
    pub fn evaluate(&self, s: Subset) -> Result<f64> {
        if !self.region.contains(s) {
            return Err(Error::InfeasibleSet);
        }
        Ok(self.objective(s))
    }

    /// Sum of the per-ratio values, without a feasibility check.
    pub fn objective(&self, s: Subset) -> f64 {
        self.ratios.iter().map(|r| r.evaluate(s)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_ratio() -> Ratio {
        Ratio::new(vec![3.0, 2.0, 1.0], 2.0, vec![1.0, 1.0, 1.0]).unwrap()
    }

    fn set(items: &[usize]) -> Subset {
        Subset::from_indices(items.iter().copied(), 3).unwrap()
    }

    #[test]
    fn evaluates_known_values() {
        let r = example_ratio();
        assert_eq!(r.evaluate(set(&[1, 2])), 5.0 / 4.0);
        assert_eq!(r.evaluate(set(&[1, 2, 3])), 6.0 / 5.0);
        assert_eq!(r.evaluate(set(&[1])), 1.0);
        assert_eq!(r.evaluate(set(&[3])), 1.0 / 3.0);
        assert_eq!(r.evaluate(Subset::EMPTY), 0.0);
    }

    #[test]
    fn empty_set_is_zero_even_when_homogeneous() {
        let r = Ratio::new(vec![1.0, 1.0], 0.0, vec![1.0, 2.0]).unwrap();
        assert!(r.is_homogeneous());
        assert_eq!(r.evaluate(Subset::EMPTY), 0.0);
    }

    #[test]
    fn construction_validates_signs() {
        assert!(Ratio::new(vec![-1.0], 1.0, vec![1.0]).is_err());
        assert!(Ratio::new(vec![1.0], -0.5, vec![1.0]).is_err());
        assert!(Ratio::new(vec![1.0], 1.0, vec![0.0]).is_err());
        assert!(Ratio::new(vec![], 1.0, vec![]).is_err());
        assert!(Ratio::new(vec![1.0, 2.0], 1.0, vec![1.0]).is_err());
    }

    #[test]
    fn accumulator_tracks_sums() {
        let r = example_ratio();
        let mut acc = r.accumulator();
        assert_eq!(acc.value(), 0.0);

        // First insertion from the empty set gains the singleton value.
        assert_eq!(acc.marginal_gain(1).unwrap(), 1.0);
        acc.extend(1).unwrap();
        assert_eq!(acc.value(), 1.0);
        assert_eq!(acc.numerator(), 3.0);
        assert_eq!(acc.denominator(), 3.0);

        acc.extend(2).unwrap();
        assert_eq!(acc.value(), 5.0 / 4.0);
        assert_eq!(acc.extend(2), Err(Error::ItemAlreadyPresent(2)));
        assert_eq!(acc.marginal_gain(2), Err(Error::ItemAlreadyPresent(2)));
    }

    #[test]
    fn marginal_gain_is_zero_at_fixed_point() {
        // h({1}) = 1 and item 2 has a_2/b_2 = 1, so inserting it is neutral.
        let r = Ratio::new(vec![3.0, 1.0], 1.0, vec![2.0, 1.0]).unwrap();
        let mut acc = r.accumulator();
        acc.extend(1).unwrap();
        assert_eq!(acc.value(), 1.0);
        assert!(acc.marginal_gain(2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn instance_checks_feasibility() {
        let inst = MultiRatioInstance::new(
            vec![example_ratio(), example_ratio()],
            FeasibleRegion::Cardinality(2),
        )
        .unwrap();
        assert_eq!(inst.evaluate(set(&[1, 2])).unwrap(), 5.0 / 2.0);
        assert_eq!(inst.evaluate(set(&[1, 2, 3])), Err(Error::InfeasibleSet));
    }

    #[test]
    fn instance_requires_uniform_ground_set() {
        let r1 = example_ratio();
        let r2 = Ratio::new(vec![1.0], 1.0, vec![1.0]).unwrap();
        assert!(MultiRatioInstance::new(vec![r1, r2], FeasibleRegion::Unconstrained).is_err());
        assert!(MultiRatioInstance::new(vec![], FeasibleRegion::Unconstrained).is_err());
    }

    #[test]
    fn min_ratio_item_breaks_ties_toward_larger_index() {
        let r = Ratio::new(vec![1.0, 2.0, 1.0], 1.0, vec![1.0, 2.0, 1.0]).unwrap();
        assert_eq!(r.min_ratio_item(), 3);
    }

    #[test]
    fn objective_is_the_sum_of_per_ratio_evaluations() {
        let ratios = vec![
            Ratio::new(vec![1.0, 0.5, 2.0], 1.5, vec![1.0, 2.0, 0.5]).unwrap(),
            Ratio::new(vec![0.2, 1.1, 0.7], 0.3, vec![0.9, 1.4, 2.2]).unwrap(),
            Ratio::new(vec![2.0, 0.0, 1.3], 2.5, vec![1.1, 0.6, 1.9]).unwrap(),
        ];
        let inst = MultiRatioInstance::new(ratios.clone(), FeasibleRegion::Unconstrained).unwrap();
        for items in [vec![], vec![2], vec![1, 3], vec![1, 2, 3]] {
            let s = Subset::from_indices(items, 3).unwrap();
            let expect: f64 = ratios.iter().map(|r| r.evaluate(s)).sum();
            assert_eq!(inst.objective(s), expect);
        }
    }
}
