//! p-choice facility location: pick exactly `p` of `n` candidate
//! locations to maximize demand-weighted market share under
//! proportional utility splitting.
//!
//! The raw objective
//!
//! ```text
//! sum_k d_k (sum_{i in S} v_ki w_i) / (sum_{i in S} v_ki)
//! ```
//!
//! is homogeneous (its ratios have no constant denominator term) and
//! therefore generically not submodular. Because `|S| = p` is fixed,
//! the denominator can be rewritten with a positive constant: setting
//! `vmin_k = delta * min_i v_ki` for some `delta` in `(0, 1)`,
//!
//! ```text
//! sum_{i in S} v_ki = p * vmin_k + sum_{i in S} (v_ki - vmin_k)
//! ```
//!
//! holds on every size-`p` set, yielding an equivalent instance with
//! `b_k0 = p * vmin_k > 0` over the relaxed family `|S| <= p`. When
//! every rewritten ratio passes the monotonicity bound the relaxation
//! is exact and greedy carries the usual guarantee.

use crate::certify::{certify_instance, check_monotone_sufficient, InstanceCertification, Verdict};
use crate::error::{Error, Result};
use crate::ratio::{MultiRatioInstance, Ratio};
use crate::region::{FeasibleRegion, ENUMERATION_LIMIT};
use crate::solve::{greedy_maximize, guarantee_for, GreedyTrace, SolveResult};
use crate::subset::{Subset, MAX_GROUND_SET};

pub use crate::assortment::ConditionCheck;

/// A p-choice facility location instance.
#[derive(Clone, Debug, PartialEq)]
pub struct PChoiceInstance {
    demands: Vec<f64>,
    utilities: Vec<Vec<f64>>,
    weights: Vec<f64>,
    p: usize,
    delta: f64,
}

/// Default homogenization parameter.
pub const DEFAULT_DELTA: f64 = 0.5;

impl PChoiceInstance {
    /// Builds an instance with demand points `k`, per-location
    /// utilities `utilities[k][i] > 0`, location weights `w_i > 0`,
    /// the number of facilities `p` and the homogenization parameter
    /// `delta` in `(0, 1)`.
    pub fn new(
        demands: Vec<f64>,
        utilities: Vec<Vec<f64>>,
        weights: Vec<f64>,
        p: usize,
        delta: f64,
    ) -> Result<PChoiceInstance> {
        let n = weights.len();
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::InvalidModel(format!(
                "location set must have between 1 and {MAX_GROUND_SET} items, got {n}"
            )));
        }
        if demands.is_empty() || demands.len() != utilities.len() {
            return Err(Error::InvalidModel(format!(
                "{} demands for {} utility rows",
                demands.len(),
                utilities.len()
            )));
        }
        if let Some(d) = demands.iter().find(|d| !d.is_finite() || **d <= 0.0) {
            return Err(Error::InvalidModel(format!(
                "demands must be finite and strictly positive, got {d}"
            )));
        }
        for (k, row) in utilities.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidModel(format!(
                    "demand point {} has {} utilities for {n} locations",
                    k + 1,
                    row.len()
                )));
            }
            if let Some(v) = row.iter().find(|v| !v.is_finite() || **v <= 0.0) {
                return Err(Error::InvalidModel(format!(
                    "utilities must be finite and strictly positive, got {v}"
                )));
            }
        }
        if let Some(w) = weights.iter().find(|w| !w.is_finite() || **w <= 0.0) {
            return Err(Error::InvalidModel(format!(
                "weights must be finite and strictly positive, got {w}"
            )));
        }
        if p == 0 || p > n {
            return Err(Error::InvalidModel(format!(
                "facility count p = {p} must satisfy 1 <= p <= {n}"
            )));
        }
        if !delta.is_finite() || delta <= 0.0 || delta >= 1.0 {
            return Err(Error::InvalidModel(format!(
                "delta = {delta} must lie strictly inside (0, 1)"
            )));
        }
        Ok(PChoiceInstance {
            demands,
            utilities,
            weights,
            p,
            delta,
        })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn num_demand_points(&self) -> usize {
        self.demands.len()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// The same instance with a different homogenization parameter.
    pub fn with_delta(&self, delta: f64) -> Result<PChoiceInstance> {
        PChoiceInstance::new(
            self.demands.clone(),
            self.utilities.clone(),
            self.weights.clone(),
            self.p,
            delta,
        )
    }

    /// Demand-weighted market share of a nonempty set of locations.
    pub fn market_share_objective(&self, s: Subset) -> Result<f64> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self
            .demands
            .iter()
            .zip(&self.utilities)
            .map(|(d, row)| {
                let mut num = 0.0;
                let mut den = 0.0;
                for i in s.iter() {
                    num += row[i - 1] * self.weights[i - 1];
                    den += row[i - 1];
                }
                d * num / den
            })
            .sum())
    }

    fn homogenized_ratio(&self, k: usize) -> Ratio {
        let row = &self.utilities[k];
        let vmin = self.delta * row.iter().copied().fold(f64::INFINITY, f64::min);
        let a = row
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| self.demands[k] * v * w)
            .collect();
        let b = row.iter().map(|v| v - vmin).collect();
        Ratio::new(a, self.p as f64 * vmin, b)
            .expect("validated instances homogenize to valid ratios")
    }

    /// Rewrites the instance as a multi-ratio core instance with
    /// positive denominator constants over the relaxed family
    /// `|S| <= p`. On every set of size exactly `p` the rewritten
    /// objective equals [`Self::market_share_objective`].
    pub fn homogenize(&self) -> MultiRatioInstance {
        let ratios = (0..self.demands.len())
            .map(|k| self.homogenized_ratio(k))
            .collect();
        MultiRatioInstance::new(ratios, FeasibleRegion::Cardinality(self.p))
            .expect("validated instances homogenize to valid core instances")
    }

    /// Monotonicity bound for demand point `k` on the rewritten ratio:
    ///
    /// ```text
    /// min_i v_ki w_i / (v_ki - vmin_k)
    ///     >= max_{|S| <= p} (sum v_ki w_i) / (p vmin_k + sum (v_ki - vmin_k))
    /// ```
    ///
    /// When it holds for every `k`, the relaxation `|S| <= p` is exact
    /// and the rewritten objective is monotone submodular.
    pub fn check_monotone(&self, k: usize, tol: f64) -> Result<ConditionCheck> {
        let ratio = self.homogenized_ratio(k);
        let report = check_monotone_sufficient(&ratio, &FeasibleRegion::Cardinality(self.p), tol)?;
        Ok(ConditionCheck {
            holds: report.verdict == Verdict::MonotoneSubmodular,
            margin: report.min_slack,
        })
    }

    /// Closed-form sufficient condition for demand point `k`:
    /// `w_min/w_max + 1 >= v_max_k / vmin_k` with
    /// `vmin_k = delta * min_i v_ki`. Implies [`Self::check_monotone`].
    pub fn check_sufficient(&self, k: usize, tol: f64) -> ConditionCheck {
        let row = &self.utilities[k];
        let v_max = row.iter().copied().fold(f64::MIN, f64::max);
        let vmin = self.delta * row.iter().copied().fold(f64::INFINITY, f64::min);
        let w_max = self.weights.iter().copied().fold(f64::MIN, f64::max);
        let w_min = self.weights.iter().copied().fold(f64::MAX, f64::min);
        let margin = w_min / w_max + 1.0 - v_max / vmin;
        ConditionCheck {
            holds: margin >= -tol,
            margin,
        }
    }

    /// Exact optimum over the size-`p` sets by enumeration.
    pub fn brute_force(&self) -> Result<SolveResult> {
        let region = FeasibleRegion::Cardinality(self.p);
        let mut best: Option<(f64, Subset)> = None;
        for s in region.enumerate(self.n())? {
            if s.len() != self.p {
                continue;
            }
            let v = self.market_share_objective(s)?;
            if best.is_none_or(|(bv, _)| v > bv) {
                best = Some((v, s));
            }
        }
        let (value, set) = best.expect("p <= n guarantees a size-p set exists");
        Ok(SolveResult {
            set,
            value,
            bound: None,
        })
    }

    /// Full solve: homogenize, certify every ratio, check the
    /// monotonicity bounds, run greedy over `|S| <= p` (which fills to
    /// exactly `p` facilities since extensions stay feasible until
    /// then) and, for enumerable ground sets, attach the exact optimum
    /// for comparison. The greedy guarantee is attached only when the
    /// relaxation is justified.
    pub fn solve(&self, tol: f64) -> Result<PChoiceSolution> {
        let core = self.homogenize();
        let certification = certify_instance(&core, tol);
        let condition_checks: Vec<ConditionCheck> = (0..self.demands.len())
            .map(|k| self.check_monotone(k, tol))
            .collect::<Result<_>>()?;
        let relaxation_justified = condition_checks.iter().all(|c| c.holds);

        let trace = greedy_maximize(&core);
        let final_set = trace.final_set;
        let reached_size_p = final_set.len() == self.p;
        let value = self.market_share_objective(final_set)?;
        let bound = if relaxation_justified {
            guarantee_for(&core, &certification)
        } else {
            None
        };
        let brute_force = if self.n() <= ENUMERATION_LIMIT {
            Some(self.brute_force()?)
        } else {
            None
        };

        Ok(PChoiceSolution {
            result: SolveResult {
                set: final_set,
                value,
                bound,
            },
            trace,
            certification,
            condition_checks,
            relaxation_justified,
            reached_size_p,
            brute_force,
        })
    }
}

/// Everything produced by [`PChoiceInstance::solve`].
#[derive(Clone, Debug)]
pub struct PChoiceSolution {
    /// The recommended size-`p` set with its market-share value.
    pub result: SolveResult,
    pub trace: GreedyTrace,
    pub certification: InstanceCertification,
    /// Per-demand-point monotonicity bounds.
    pub condition_checks: Vec<ConditionCheck>,
    /// All monotonicity bounds hold, so `|S| <= p` is exact.
    pub relaxation_justified: bool,
    /// The greedy run inserted exactly `p` facilities.
    pub reached_size_p: bool,
    /// Exact optimum over size-`p` sets, when enumerable.
    pub brute_force: Option<SolveResult>,
}
