//! Maximization routines: plain and lazy greedy, exact brute force over
//! the feasible family, and parametric (Newton-style) single-ratio
//! maximization.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::certify::{InstanceCertification, Verdict};
use crate::error::{Error, Result};
use crate::ratio::{MultiRatioInstance, Ratio, RatioAccumulator};
use crate::region::{FeasibleRegion, ENUMERATION_LIMIT};
use crate::subset::Subset;

/// One greedy insertion: the chosen item and the objective value right
/// after inserting it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GreedyStep {
    pub item: usize,
    pub value: f64,
}

/// Full record of a greedy run.
///
/// The loop keeps inserting the best feasible extension while one
/// exists, even when the objective drops, so for non-monotone
/// objectives the final set can be dominated by an intermediate one.
/// `best_prefix_set` tracks the best set seen along the trace
/// (including the empty prefix) and is the recommended answer.
#[derive(Clone, Debug, PartialEq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    pub final_set: Subset,
    pub final_value: f64,
    pub best_prefix_set: Subset,
    pub best_prefix_value: f64,
}

impl GreedyTrace {
    /// The recommended solution: the best prefix of the insertion
    /// sequence.
    pub fn recommended(&self) -> (Subset, f64) {
        (self.best_prefix_set, self.best_prefix_value)
    }

    /// Items in insertion order.
    pub fn insertion_order(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.item).collect()
    }
}

/// A declared approximation guarantee attached to a solve result.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Guarantee {
    /// Greedy on a certified monotone submodular objective under a
    /// cardinality constraint is (1 - 1/e)-optimal.
    CardinalityGreedy,
    /// Greedy over a matroid is 1/2-optimal. Reported for reference
    /// only; matroid regions are not implemented here.
    MatroidGreedyCited,
    /// The revenue-ordered baseline is 1/(1 + ln(r_max/r_min))-optimal
    /// for unconstrained assortment instances.
    RevenueOrdered { log_ratio: f64 },
}

impl Guarantee {
    /// The guaranteed fraction of the optimum.
    pub fn factor(&self) -> f64 {
        match self {
            Guarantee::CardinalityGreedy => 1.0 - (-1.0f64).exp(),
            Guarantee::MatroidGreedyCited => 0.5,
            Guarantee::RevenueOrdered { log_ratio } => 1.0 / (1.0 + log_ratio),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Guarantee::CardinalityGreedy => format!(
                "greedy is ({:.6})-optimal for monotone submodular objectives under a cardinality constraint",
                self.factor()
            ),
            Guarantee::MatroidGreedyCited => {
                "greedy over a matroid is 1/2-optimal (cited, not computed here)".to_string()
            }
            Guarantee::RevenueOrdered { .. } => format!(
                "revenue-ordered baseline is ({:.6})-optimal for the unconstrained assortment problem",
                self.factor()
            ),
        }
    }
}

/// A solved set with its objective value and an optional declared
/// approximation guarantee.
#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub set: Subset,
    pub value: f64,
    pub bound: Option<Guarantee>,
}

// Total gain of inserting `j`, summed across the per-ratio
// accumulators. Both greedy variants select by this exact quantity so
// their tie behavior is identical.
fn total_gain(accs: &[RatioAccumulator<'_>], j: usize) -> f64 {
    accs.iter()
        .map(|a| {
            a.marginal_gain(j)
                .expect("candidate items are outside the set")
        })
        .sum()
}

fn total_value(accs: &[RatioAccumulator<'_>]) -> f64 {
    accs.iter().map(|a| a.value()).sum()
}

/// Greedy maximization: starting from the empty set, repeatedly insert
/// the feasible item with the largest objective gain (smallest index on
/// ties) while any feasible extension exists.
pub fn greedy_maximize(inst: &MultiRatioInstance) -> GreedyTrace {
    let n = inst.n();
    let region = inst.region();
    let mut accs: Vec<RatioAccumulator<'_>> =
        inst.ratios().iter().map(|r| r.accumulator()).collect();
    let mut current = Subset::EMPTY;
    let mut steps = Vec::new();
    let mut final_value = 0.0;
    let mut best_set = Subset::EMPTY;
    let mut best_value = 0.0;

    loop {
        let mut chosen: Option<(f64, usize)> = None;
        for j in 1..=n {
            if current.contains(j) || !region.extendable(current, j) {
                continue;
            }
            let gain = total_gain(&accs, j);
            if chosen.is_none_or(|(g, _)| gain > g) {
                chosen = Some((gain, j));
            }
        }
        let Some((_, j)) = chosen else { break };
        for acc in accs.iter_mut() {
            acc.extend(j).expect("chosen item is outside the set");
        }
        current.insert(j);
        final_value = total_value(&accs);
        steps.push(GreedyStep {
            item: j,
            value: final_value,
        });
        if final_value > best_value {
            best_value = final_value;
            best_set = current;
        }
    }

    GreedyTrace {
        steps,
        final_set: current,
        final_value,
        best_prefix_set: best_set,
        best_prefix_value: best_value,
    }
}

// Heap entry for the lazy variant: ordered by cached gain, then by
// smaller item index, with a stamp recording the set size the gain was
// computed at.
struct Candidate {
    gain: f64,
    item: usize,
    stamp: usize,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gain
            .total_cmp(&other.gain)
            .then_with(|| other.item.cmp(&self.item))
    }
}

/// Lazy (priority-queue) greedy. Valid only for instances certified
/// submodular, where cached gains are upper bounds on fresh ones; the
/// result is identical to [`greedy_maximize`], including tie behavior.
pub fn lazy_greedy_maximize(
    inst: &MultiRatioInstance,
    cert: &InstanceCertification,
) -> Result<GreedyTrace> {
    if !cert.aggregate.verdict.is_submodular() {
        return Err(Error::NotCertifiedSubmodular);
    }
    let n = inst.n();
    let region = inst.region();
    let mut accs: Vec<RatioAccumulator<'_>> =
        inst.ratios().iter().map(|r| r.accumulator()).collect();
    let mut current = Subset::EMPTY;
    let mut steps: Vec<GreedyStep> = Vec::new();
    let mut final_value = 0.0;
    let mut best_set = Subset::EMPTY;
    let mut best_value = 0.0;

    let mut heap: BinaryHeap<Candidate> = (1..=n)
        .filter(|&j| region.extendable(Subset::EMPTY, j))
        .map(|item| Candidate {
            gain: total_gain(&accs, item),
            item,
            stamp: 0,
        })
        .collect();

    while let Some(top) = heap.pop() {
        if !region.extendable(current, top.item) {
            // Downward-closed regions only shrink the extension set, so
            // this item can never come back.
            continue;
        }
        if top.stamp < steps.len() {
            heap.push(Candidate {
                gain: total_gain(&accs, top.item),
                item: top.item,
                stamp: steps.len(),
            });
            continue;
        }
        for acc in accs.iter_mut() {
            acc.extend(top.item)
                .expect("heap never holds selected items");
        }
        current.insert(top.item);
        final_value = total_value(&accs);
        steps.push(GreedyStep {
            item: top.item,
            value: final_value,
        });
        if final_value > best_value {
            best_value = final_value;
            best_set = current;
        }
    }

    Ok(GreedyTrace {
        steps,
        final_set: current,
        final_value,
        best_prefix_set: best_set,
        best_prefix_value: best_value,
    })
}

/// Exact optimum by enumerating the feasible family (ascending bitmask
/// order; ties keep the first, i.e. lexicographically smallest, set).
/// Guarded at [`ENUMERATION_LIMIT`] items.
pub fn brute_force_maximize(inst: &MultiRatioInstance) -> Result<SolveResult> {
    let mut best: Option<(f64, Subset)> = None;
    for s in inst.region().enumerate(inst.n())? {
        let v = inst.objective(s);
        if best.is_none_or(|(bv, _)| v > bv) {
            best = Some((v, s));
        }
    }
    let (value, set) = best.expect("the empty set is always feasible");
    Ok(SolveResult {
        set,
        value,
        bound: None,
    })
}

/// Maximizes a single ratio over the region.
///
/// Unconstrained and cardinality regions use the parametric iteration
/// of [`single_ratio_max_with_trace`]; knapsack regions fall back to
/// brute force (rejected beyond [`ENUMERATION_LIMIT`] items).
pub fn single_ratio_max(r: &Ratio, region: &FeasibleRegion, tol: f64) -> Result<SolveResult> {
    single_ratio_max_with_trace(r, region, tol).map(|(res, _)| res)
}

/// Like [`single_ratio_max`], also returning the parameter iterates.
///
/// The parametric iteration starts from the best singleton value
/// `max_i a_i / (b0 + b_i)` and repeats: at parameter `lambda`, pick
/// the items with positive score `a_i - lambda * b_i` (the top `p` of
/// them under a cardinality bound), then move `lambda` to the value of
/// the selected set. It stops when the selected set repeats or the
/// subproblem value drops to `tol * (1 + lambda)`; the iterates are
/// strictly increasing until then. The knapsack fallback solves by
/// enumeration and reports no iterates.
pub fn single_ratio_max_with_trace(
    r: &Ratio,
    region: &FeasibleRegion,
    tol: f64,
) -> Result<(SolveResult, Vec<f64>)> {
    let cap = match region {
        FeasibleRegion::Unconstrained => None,
        FeasibleRegion::Cardinality(p) => Some(*p),
        FeasibleRegion::Knapsack { .. } => {
            if r.n() > ENUMERATION_LIMIT {
                return Err(Error::UnsupportedRegion(format!(
                    "knapsack with {} items exceeds the enumeration limit of {ENUMERATION_LIMIT}",
                    r.n()
                )));
            }
            let inst = MultiRatioInstance::new(vec![r.clone()], region.clone())?;
            return Ok((brute_force_maximize(&inst)?, Vec::new()));
        }
    };
    region.validate(r.n())?;

    let n = r.n();
    // Best singleton: a feasible starting point and a lower bound.
    let mut start = 1;
    for i in 2..=n {
        if r.a(i) / (r.b0() + r.b(i)) > r.a(start) / (r.b0() + r.b(start)) {
            start = i;
        }
    }
    let mut current = Subset::EMPTY.with(start);
    let mut lambda = r.evaluate(current);
    let mut lambdas = vec![lambda];

    // The iteration visits a strictly improving set each round, so it
    // terminates after finitely many steps; the cap is a safety net
    // against floating-point stalls.
    for _ in 0..8 * n + 64 {
        let mut scored: Vec<(f64, usize)> = (1..=n)
            .map(|i| (r.a(i) - lambda * r.b(i), i))
            .filter(|(score, _)| *score > 0.0)
            .collect();
        if let Some(p) = cap {
            scored.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
            scored.truncate(p);
        }
        let subvalue = scored.iter().map(|(s, _)| s).sum::<f64>() - lambda * r.b0();
        let next: Subset = scored.iter().map(|(_, i)| *i).collect();
        if subvalue <= tol * (1.0 + lambda) {
            // The final subproblem optimizer is at least as good as the
            // set that produced the current parameter; keep it.
            if !next.is_empty() && r.evaluate(next) > lambda {
                current = next;
                lambda = r.evaluate(current);
                lambdas.push(lambda);
            }
            break;
        }
        if next == current {
            break;
        }
        current = next;
        lambda = r.evaluate(current);
        lambdas.push(lambda);
    }

    Ok((
        SolveResult {
            set: current,
            value: lambda,
            bound: None,
        },
        lambdas,
    ))
}

/// The declared approximation guarantee for solving an instance by
/// greedy, given its certification: (1 - 1/e) for certified monotone
/// submodular objectives under a cardinality constraint, nothing
/// otherwise.
pub fn guarantee_for(inst: &MultiRatioInstance, cert: &InstanceCertification) -> Option<Guarantee> {
    match (cert.aggregate.verdict, inst.region()) {
        (Verdict::MonotoneSubmodular, FeasibleRegion::Cardinality(_)) => {
            Some(Guarantee::CardinalityGreedy)
        }
        _ => None,
    }
}
