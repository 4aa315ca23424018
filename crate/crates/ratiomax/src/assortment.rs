//! Assortment optimization under a mixed multinomial logit choice
//! model, reduced to the multi-ratio core.
//!
//! A customer of segment `k` offered assortment `S` picks product
//! `i ∈ S` with probability `v_ki / (v_k0 + sum_{j in S} v_kj)`. The
//! expected revenue `sum_k p_k sum_{i in S} r_i q(i, S; v^k)` is a sum
//! of hyperbolic ratios with coefficients `a_ki = p_k r_i v_ki`,
//! `b_ki = v_ki` and `b_k0 = v_k0`, so every marginal ratio is
//! `a_ki / b_ki = p_k r_i`.

use crate::error::{Error, Result};
use crate::ratio::{MultiRatioInstance, Ratio};
use crate::region::FeasibleRegion;
use crate::solve::{Guarantee, SolveResult};
use crate::subset::{Subset, MAX_GROUND_SET};

/// One customer segment: its probability and preference weights.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    /// Probability of a customer belonging to this segment.
    pub probability: f64,
    /// Weight of the no-purchase option, strictly positive.
    pub no_purchase_weight: f64,
    /// Preference weights per product, strictly positive.
    pub weights: Vec<f64>,
}

/// Outcome of a sufficient-condition check: whether it holds and the
/// signed margin (right-hand side minus left-hand side).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConditionCheck {
    pub holds: bool,
    pub margin: f64,
}

/// An assortment instance: product revenues, a finite mixture of
/// segments and the feasible family of assortments.
#[derive(Clone, Debug, PartialEq)]
pub struct MmnlInstance {
    revenues: Vec<f64>,
    segments: Vec<Segment>,
    region: FeasibleRegion,
}

impl MmnlInstance {
    pub fn new(
        revenues: Vec<f64>,
        segments: Vec<Segment>,
        region: FeasibleRegion,
    ) -> Result<MmnlInstance> {
        let n = revenues.len();
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::InvalidModel(format!(
                "product set must have between 1 and {MAX_GROUND_SET} items, got {n}"
            )));
        }
        if segments.is_empty() {
            return Err(Error::InvalidModel(
                "at least one segment is required".into(),
            ));
        }
        if let Some(r) = revenues.iter().find(|r| !r.is_finite() || **r < 0.0) {
            return Err(Error::InvalidModel(format!(
                "revenues must be finite and nonnegative, got {r}"
            )));
        }
        let mut total_probability = 0.0;
        for (k, seg) in segments.iter().enumerate() {
            if !seg.probability.is_finite() || seg.probability < 0.0 {
                return Err(Error::InvalidModel(format!(
                    "segment {} probability {} must be nonnegative",
                    k + 1,
                    seg.probability
                )));
            }
            total_probability += seg.probability;
            if !seg.no_purchase_weight.is_finite() || seg.no_purchase_weight <= 0.0 {
                return Err(Error::InvalidModel(format!(
                    "segment {} no-purchase weight {} must be strictly positive",
                    k + 1,
                    seg.no_purchase_weight
                )));
            }
            if seg.weights.len() != n {
                return Err(Error::InvalidModel(format!(
                    "segment {} has {} weights for {n} products",
                    k + 1,
                    seg.weights.len()
                )));
            }
            if let Some(w) = seg.weights.iter().find(|w| !w.is_finite() || **w <= 0.0) {
                return Err(Error::InvalidModel(format!(
                    "segment {} preference weights must be strictly positive, got {w}",
                    k + 1
                )));
            }
        }
        if (total_probability - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidModel(format!(
                "segment probabilities sum to {total_probability}, expected 1"
            )));
        }
        region.validate(n)?;
        Ok(MmnlInstance {
            revenues,
            segments,
            region,
        })
    }

    pub fn n(&self) -> usize {
        self.revenues.len()
    }

    pub fn num_segments(&self) -> usize {
        self.segments.len()
    }

    pub fn revenues(&self) -> &[f64] {
        &self.revenues
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn region(&self) -> &FeasibleRegion {
        &self.region
    }

    fn weight_sum(&self, k: usize, s: Subset) -> f64 {
        s.iter().map(|i| self.segments[k].weights[i - 1]).sum()
    }

    /// Probability that a segment-`k` customer picks product `i` from
    /// the offered set `s`. Segments are 0-indexed, products 1-indexed.
    pub fn choice_probability(&self, k: usize, i: usize, s: Subset) -> Result<f64> {
        if !s.contains(i) {
            return Err(Error::ItemNotOffered(i));
        }
        let seg = &self.segments[k];
        Ok(seg.weights[i - 1] / (seg.no_purchase_weight + self.weight_sum(k, s)))
    }

    /// Probability that a segment-`k` customer purchases anything from
    /// `s`; always in `[0, 1)`.
    pub fn purchase_probability(&self, k: usize, s: Subset) -> f64 {
        let sum = self.weight_sum(k, s);
        sum / (self.segments[k].no_purchase_weight + sum)
    }

    /// Largest purchase probability across segments.
    pub fn alpha(&self, s: Subset) -> f64 {
        (0..self.segments.len())
            .map(|k| self.purchase_probability(k, s))
            .fold(0.0, f64::max)
    }

    /// Expected revenue of offering `s`, computed directly from the
    /// choice probabilities (independent of the multi-ratio reduction).
    pub fn expected_revenue(&self, s: Subset) -> f64 {
        self.segments
            .iter()
            .map(|seg| {
                let mut revenue = 0.0;
                let mut weight = 0.0;
                for i in s.iter() {
                    revenue += self.revenues[i - 1] * seg.weights[i - 1];
                    weight += seg.weights[i - 1];
                }
                if weight == 0.0 {
                    0.0
                } else {
                    seg.probability * revenue / (seg.no_purchase_weight + weight)
                }
            })
            .sum()
    }

    /// Reduces the instance to the multi-ratio core: one ratio per
    /// segment with `a_ki = p_k r_i v_ki`, `b_ki = v_ki`, `b_k0 = v_k0`.
    pub fn to_multi_ratio(&self) -> MultiRatioInstance {
        let ratios = self
            .segments
            .iter()
            .map(|seg| {
                let a = self
                    .revenues
                    .iter()
                    .zip(&seg.weights)
                    .map(|(r, v)| seg.probability * r * v)
                    .collect();
                Ratio::new(a, seg.no_purchase_weight, seg.weights.clone())
                    .expect("validated instances reduce to valid ratios")
            })
            .collect();
        MultiRatioInstance::new(ratios, self.region.clone())
            .expect("validated instances reduce to valid core instances")
    }

    // Largest sum of segment-k preference weights over the feasible
    // family; the purchase probability is increasing in that sum.
    fn max_weight_sum(&self, k: usize) -> Result<f64> {
        let seg = &self.segments[k];
        match &self.region {
            FeasibleRegion::Unconstrained => Ok(seg.weights.iter().sum()),
            FeasibleRegion::Cardinality(p) => {
                let mut sorted = seg.weights.clone();
                sorted.sort_by(|x, y| y.total_cmp(x));
                Ok(sorted.iter().take(*p).sum())
            }
            FeasibleRegion::Knapsack { .. } => {
                if self.n() > crate::region::ENUMERATION_LIMIT {
                    return Err(Error::UnsupportedRegion(format!(
                        "knapsack with {} items exceeds the enumeration limit of {}",
                        self.n(),
                        crate::region::ENUMERATION_LIMIT
                    )));
                }
                let mut best = 0.0f64;
                for s in self.region.enumerate(self.n())? {
                    best = best.max(self.weight_sum(k, s));
                }
                Ok(best)
            }
        }
    }

    /// Revenue-spread condition for segment `k`:
    ///
    /// ```text
    /// (r_max - r_min) / r_min <= min_{S in F} (1 - q(S)) / q(S)
    /// ```
    ///
    /// The right-hand side is attained at the feasible set maximizing
    /// the total preference weight and equals `v_k0 / max_S sum v_ki`.
    /// When it holds, segment `k`'s revenue function is monotone
    /// nondecreasing and submodular.
    pub fn check_revenue_spread(&self, k: usize, tol: f64) -> Result<ConditionCheck> {
        let r_max = self.revenues.iter().copied().fold(f64::MIN, f64::max);
        let r_min = self.revenues.iter().copied().fold(f64::MAX, f64::min);
        let spread = if r_max == r_min {
            0.0
        } else if r_min == 0.0 {
            f64::INFINITY
        } else {
            (r_max - r_min) / r_min
        };
        let max_sum = self.max_weight_sum(k)?;
        let odds = if max_sum == 0.0 {
            f64::INFINITY
        } else {
            self.segments[k].no_purchase_weight / max_sum
        };
        let margin = odds - spread;
        Ok(ConditionCheck {
            holds: margin >= -tol,
            margin,
        })
    }

    /// Revenue-ratio condition under a cardinality bound `p`:
    /// `r_max / r_min <= 1 + (1 - alpha(S)) / alpha(S)` for all
    /// `|S| <= p`, evaluated at the alpha-maximizing set (each
    /// segment's top-`p` products by preference weight). When it holds,
    /// greedy carries the (1 - 1/e) guarantee.
    pub fn check_cardinality_ratio_condition(&self, p: usize, tol: f64) -> Result<ConditionCheck> {
        if p == 0 || p > self.n() {
            return Err(Error::InvalidModel(format!(
                "cardinality bound p = {p} must satisfy 1 <= p <= {}",
                self.n()
            )));
        }
        let alpha_max = (0..self.segments.len())
            .map(|k| {
                let seg = &self.segments[k];
                let mut sorted = seg.weights.clone();
                sorted.sort_by(|x, y| y.total_cmp(x));
                let sum: f64 = sorted.iter().take(p).sum();
                sum / (seg.no_purchase_weight + sum)
            })
            .fold(0.0f64, f64::max);
        let r_max = self.revenues.iter().copied().fold(f64::MIN, f64::max);
        let r_min = self.revenues.iter().copied().fold(f64::MAX, f64::min);
        let ratio = if r_max == r_min {
            1.0
        } else if r_min == 0.0 {
            f64::INFINITY
        } else {
            r_max / r_min
        };
        let margin = 1.0 / alpha_max - ratio;
        Ok(ConditionCheck {
            holds: margin >= -tol,
            margin,
        })
    }

    /// Evaluates the nested revenue-ordered assortments (one per
    /// distinct revenue threshold, descending) and returns the best
    /// feasible one. Under a cardinality bound each threshold set is
    /// truncated to its top-`p` products by revenue (index tie-break);
    /// under a knapsack bound infeasible threshold sets are skipped.
    ///
    /// The 1/(1 + ln(r_max/r_min)) guarantee is attached only for the
    /// unconstrained family, and omitted when `r_min = 0` leaves it
    /// undefined.
    pub fn revenue_ordered_baseline(&self) -> SolveResult {
        let mut thresholds = self.revenues.clone();
        thresholds.sort_by(|x, y| y.total_cmp(x));
        thresholds.dedup();

        // The empty assortment is the above-maximum threshold set and
        // the fallback when every other threshold set is infeasible.
        let mut best_set = Subset::EMPTY;
        let mut best_value = 0.0f64;
        for &t in &thresholds {
            let full: Vec<usize> = (1..=self.n())
                .filter(|&i| self.revenues[i - 1] >= t)
                .collect();
            let candidate = match &self.region {
                FeasibleRegion::Unconstrained => full.into_iter().collect(),
                FeasibleRegion::Cardinality(p) => {
                    let mut by_revenue = full;
                    by_revenue.sort_by(|&x, &y| {
                        self.revenues[y - 1]
                            .total_cmp(&self.revenues[x - 1])
                            .then(x.cmp(&y))
                    });
                    by_revenue.into_iter().take(*p).collect()
                }
                FeasibleRegion::Knapsack { .. } => {
                    let s: Subset = full.into_iter().collect();
                    if !self.region.contains(s) {
                        continue;
                    }
                    s
                }
            };
            let value = self.expected_revenue(candidate);
            if value > best_value {
                best_value = value;
                best_set = candidate;
            }
        }

        let r_max = self.revenues.iter().copied().fold(f64::MIN, f64::max);
        let r_min = self.revenues.iter().copied().fold(f64::MAX, f64::min);
        let bound = match &self.region {
            FeasibleRegion::Unconstrained if r_min > 0.0 => Some(Guarantee::RevenueOrdered {
                log_ratio: (r_max / r_min).ln(),
            }),
            _ => None,
        };
        SolveResult {
            set: best_set,
            value: best_value,
            bound,
        }
    }
}
