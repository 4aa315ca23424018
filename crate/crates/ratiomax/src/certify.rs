//! Submodularity and monotonicity certification.
//!
//! Two routes are available for a single ratio with `b0 > 0`:
//!
//! * an exhaustive scan of the diminishing-returns definition
//!   `f(S ∪ {i,j}) + f(S) <= f(S ∪ {i}) + f(S ∪ {j})` over every subset
//!   and item pair whose union is feasible, applicable to any
//!   set-function oracle, and
//! * an exact pairwise scan specific to hyperbolic ratios:
//!   `h(S ∪ {i}) + h(S ∪ {j}) <= a_i/b_i + a_j/b_j`, which certifies
//!   submodularity if and only if it holds for all such triples.
//!
//! Monotonicity is cheaper: a ratio is monotone nondecreasing exactly
//! when `min_i a_i/b_i >= max_{S in F} h(S)`, which reduces to a single
//! fractional maximization (and, over the unconstrained family, to the
//! closed form `min_i a_i/b_i >= h(N)`). Monotone ratios are always
//! submodular, so the cheap test is tried first.
//!
//! Homogeneous ratios (`b0 = 0`) are generically not submodular: as
//! soon as some feasible set holds three items with pairwise distinct
//! marginal ratios, a four-set witness violating the definition can be
//! constructed directly.
//!
//! All inequality checks are classified with a signed slack against a
//! configurable tolerance; certifications granted with slack inside
//! `[-tol, 0)` are flagged as marginal.

use std::fmt;

use crate::error::{Error, Result};
use crate::ratio::{MultiRatioInstance, Ratio};
use crate::region::FeasibleRegion;
use crate::solve::single_ratio_max;
use crate::subset::Subset;

/// Default classification tolerance for all certification inequalities.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Largest ground set accepted by the exhaustive pair scans.
pub const SCAN_LIMIT: usize = 20;

/// Outcome of a certification test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Certified submodular over the region.
    Submodular,
    /// A violating witness exists.
    NotSubmodular,
    /// Certified monotone nondecreasing, hence also submodular.
    MonotoneSubmodular,
    /// The applied tests were sufficient only and did not certify.
    Inconclusive,
}

impl Verdict {
    /// Whether the verdict certifies submodularity.
    pub fn is_submodular(self) -> bool {
        matches!(self, Verdict::Submodular | Verdict::MonotoneSubmodular)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Submodular => write!(f, "submodular"),
            Verdict::NotSubmodular => write!(f, "not submodular"),
            Verdict::MonotoneSubmodular => write!(f, "monotone submodular"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Which test produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Exhaustive diminishing-returns scan of a set-function oracle.
    DefinitionScan,
    /// Exact pairwise marginal-ratio scan for a single ratio.
    PairwiseScan,
    /// `min_i a_i/b_i >= max_{S in F} h(S)` via fractional maximization.
    MonotoneBound,
    /// Closed form `min_i a_i/b_i >= h(N)` over the unconstrained family.
    GlobalMonotoneBound,
    /// Constructed witness for a homogeneous ratio with three distinct
    /// marginal ratios in a feasible set.
    HomogeneousObstruction,
    /// Aggregate verdict from per-ratio certificates (nonnegative sums
    /// of submodular functions are submodular).
    PerRatioClosure,
    /// Exhaustive definition scan applied to the multi-ratio sum.
    AggregateScan,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::DefinitionScan => write!(f, "definition scan"),
            Method::PairwiseScan => write!(f, "pairwise marginal-ratio scan"),
            Method::MonotoneBound => write!(f, "monotone bound"),
            Method::GlobalMonotoneBound => write!(f, "global monotone bound"),
            Method::HomogeneousObstruction => write!(f, "homogeneous obstruction"),
            Method::PerRatioClosure => write!(f, "per-ratio closure"),
            Method::AggregateScan => write!(f, "aggregate definition scan"),
        }
    }
}

/// A triple `(S, i, j)` pinpointing a violated certification inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub base: Subset,
    pub i: usize,
    pub j: usize,
}

impl Witness {
    /// Replays the diminishing-returns inequality at this witness:
    /// `f(S ∪ {i}) + f(S ∪ {j}) - f(S ∪ {i,j}) - f(S)`.
    pub fn definition_slack(&self, f: impl Fn(Subset) -> f64) -> f64 {
        f(self.base.with(self.i)) + f(self.base.with(self.j))
            - f(self.base.with(self.i).with(self.j))
            - f(self.base)
    }

    /// Replays the pairwise marginal-ratio inequality at this witness:
    /// `a_i/b_i + a_j/b_j - h(S ∪ {i}) - h(S ∪ {j})`.
    pub fn pairwise_slack(&self, r: &Ratio) -> f64 {
        r.item_ratio(self.i) + r.item_ratio(self.j)
            - r.evaluate(self.base.with(self.i))
            - r.evaluate(self.base.with(self.j))
    }

    /// The four sets entering the diminishing-returns inequality.
    pub fn quadruple(&self) -> [Subset; 4] {
        [
            self.base.with(self.i),
            self.base.with(self.j),
            self.base.with(self.i).with(self.j),
            self.base,
        ]
    }
}

/// Result of a certification test: verdict, the tightest signed slack
/// observed, an optional violating witness and the test that ran.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificationReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Smallest `RHS - LHS` over all tested inequalities; `+inf` when
    /// nothing was tested (vacuous certifications).
    pub min_slack: f64,
    pub method: Method,
    /// Certification granted with slack in `[-tol, 0)`.
    pub marginal: bool,
}

impl CertificationReport {
    fn certified(verdict: Verdict, min_slack: f64, method: Method, tol: f64) -> Self {
        CertificationReport {
            verdict,
            witness: None,
            min_slack,
            method,
            marginal: min_slack < 0.0 && min_slack >= -tol,
        }
    }
}

/// Result of an exhaustive monotonicity scan.
#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityScan {
    pub monotone: bool,
    /// Smallest `f(S ∪ {j}) - f(S)` over all feasible extensions.
    pub min_slack: f64,
    /// A violating `(S, j)` pair when not monotone.
    pub witness: Option<(Subset, usize)>,
}

/// Per-ratio reports plus the aggregate verdict for an instance.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceCertification {
    pub per_ratio: Vec<CertificationReport>,
    pub aggregate: CertificationReport,
}

// Feasibility lookups for scan loops. The knapsack table accumulates
// weights in ascending item order, matching `FeasibleRegion::contains`
// bit for bit.
enum FeasCheck {
    All,
    Cardinality(u32),
    Table(Vec<bool>),
}

impl FeasCheck {
    fn new(region: &FeasibleRegion, n: usize) -> FeasCheck {
        match region {
            FeasibleRegion::Unconstrained => FeasCheck::All,
            FeasibleRegion::Cardinality(p) => FeasCheck::Cardinality(*p as u32),
            FeasibleRegion::Knapsack { weights, capacity } => {
                let size = 1usize << n;
                let mut sums = vec![0.0f64; size];
                let mut feasible = vec![false; size];
                feasible[0] = true;
                for mask in 1..size {
                    let high = usize::BITS - 1 - mask.leading_zeros();
                    sums[mask] = sums[mask ^ (1 << high)] + weights[high as usize];
                    feasible[mask] = sums[mask] <= *capacity;
                }
                FeasCheck::Table(feasible)
            }
        }
    }

    fn contains(&self, mask: usize) -> bool {
        match self {
            FeasCheck::All => true,
            FeasCheck::Cardinality(p) => mask.count_ones() <= *p,
            FeasCheck::Table(t) => t[mask],
        }
    }
}

fn scan_guard(n: usize) -> Result<()> {
    if n > SCAN_LIMIT {
        return Err(Error::GroundSetTooLarge {
            n,
            limit: SCAN_LIMIT,
        });
    }
    Ok(())
}

// Tabulates an oracle over all subsets of {1, .., n}.
fn tabulate(f: impl Fn(Subset) -> f64, n: usize) -> Vec<f64> {
    (0..1u64 << n).map(|m| f(Subset::from_mask(m))).collect()
}

// Tabulates h over all subsets with the same summation order as
// `Ratio::evaluate` (ascending items), so table entries agree bit for
// bit with direct evaluation.
fn tabulate_ratio(r: &Ratio) -> Vec<f64> {
    let n = r.n();
    let size = 1usize << n;
    let mut num = vec![0.0f64; size];
    let mut den = vec![r.b0(); size];
    let mut vals = vec![0.0f64; size];
    for mask in 1..size {
        let high = usize::BITS - 1 - mask.leading_zeros();
        let rest = mask ^ (1 << high);
        num[mask] = num[rest] + r.a(high as usize + 1);
        den[mask] = den[rest] + r.b(high as usize + 1);
        vals[mask] = num[mask] / den[mask];
    }
    vals
}

// Shared pair-scan skeleton: minimizes `slack(S, i, j)` over all
// subsets and pairs i < j outside S with S ∪ {i,j} feasible. Masks are
// visited in ascending order, so the reported minimizer is the first
// triple attaining the minimum.
fn min_over_pairs(
    n: usize,
    feas: &FeasCheck,
    slack: impl Fn(usize, usize, usize) -> f64,
) -> (f64, Option<Witness>) {
    let size = 1usize << n;
    let mut min_slack = f64::INFINITY;
    let mut argmin = None;
    for mask in 0..size {
        for i in 1..=n {
            if mask & (1 << (i - 1)) != 0 {
                continue;
            }
            for j in (i + 1)..=n {
                if mask & (1 << (j - 1)) != 0 {
                    continue;
                }
                let union = mask | (1 << (i - 1)) | (1 << (j - 1));
                if !feas.contains(union) {
                    continue;
                }
                let s = slack(mask, i, j);
                if s < min_slack {
                    min_slack = s;
                    argmin = Some(Witness {
                        base: Subset::from_mask(mask as u64),
                        i,
                        j,
                    });
                }
            }
        }
    }
    (min_slack, argmin)
}

fn report_from_scan(
    min_slack: f64,
    argmin: Option<Witness>,
    method: Method,
    tol: f64,
) -> CertificationReport {
    if min_slack < -tol {
        CertificationReport {
            verdict: Verdict::NotSubmodular,
            witness: argmin,
            min_slack,
            method,
            marginal: false,
        }
    } else {
        CertificationReport::certified(Verdict::Submodular, min_slack, method, tol)
    }
}

/// Exhaustively tests the diminishing-returns definition for an
/// arbitrary set-function oracle over all `S` and pairs `i < j` with
/// `S ∪ {i,j}` feasible. Guarded at [`SCAN_LIMIT`] items.
pub fn check_submodular_definition(
    f: impl Fn(Subset) -> f64,
    region: &FeasibleRegion,
    n: usize,
    tol: f64,
) -> Result<CertificationReport> {
    scan_guard(n)?;
    let feas = FeasCheck::new(region, n);
    let vals = tabulate(f, n);
    let (min_slack, argmin) = min_over_pairs(n, &feas, |mask, i, j| {
        let bi = 1usize << (i - 1);
        let bj = 1usize << (j - 1);
        vals[mask | bi] + vals[mask | bj] - vals[mask | bi | bj] - vals[mask]
    });
    Ok(report_from_scan(
        min_slack,
        argmin,
        Method::DefinitionScan,
        tol,
    ))
}

/// Exhaustively tests monotonicity of a set-function oracle:
/// `f(S ∪ {j}) >= f(S)` for every feasible extension.
pub fn check_monotone_definition(
    f: impl Fn(Subset) -> f64,
    region: &FeasibleRegion,
    n: usize,
    tol: f64,
) -> Result<MonotonicityScan> {
    scan_guard(n)?;
    let feas = FeasCheck::new(region, n);
    let vals = tabulate(f, n);
    let size = 1usize << n;
    let mut min_slack = f64::INFINITY;
    let mut argmin = None;
    for mask in 0..size {
        for j in 1..=n {
            let bj = 1usize << (j - 1);
            if mask & bj != 0 || !feas.contains(mask | bj) {
                continue;
            }
            let s = vals[mask | bj] - vals[mask];
            if s < min_slack {
                min_slack = s;
                argmin = Some((Subset::from_mask(mask as u64), j));
            }
        }
    }
    let monotone = min_slack >= -tol;
    Ok(MonotonicityScan {
        monotone,
        min_slack,
        witness: if monotone { None } else { argmin },
    })
}

/// Exact submodularity certificate for a single ratio with `b0 > 0`:
/// scans `h(S ∪ {i}) + h(S ∪ {j}) <= a_i/b_i + a_j/b_j` over all triples
/// with `S ∪ {i,j}` feasible. The verdict agrees with the definition
/// scan on the same inputs.
pub fn check_ratio_submodular(
    r: &Ratio,
    region: &FeasibleRegion,
    tol: f64,
) -> Result<CertificationReport> {
    if r.is_homogeneous() {
        return Err(Error::HomogeneousRatio);
    }
    scan_guard(r.n())?;
    let n = r.n();
    let feas = FeasCheck::new(region, n);
    let vals = tabulate_ratio(r);
    let ratios: Vec<f64> = (1..=n).map(|i| r.item_ratio(i)).collect();
    let (min_slack, argmin) = min_over_pairs(n, &feas, |mask, i, j| {
        let bi = 1usize << (i - 1);
        let bj = 1usize << (j - 1);
        ratios[i - 1] + ratios[j - 1] - vals[mask | bi] - vals[mask | bj]
    });
    Ok(report_from_scan(
        min_slack,
        argmin,
        Method::PairwiseScan,
        tol,
    ))
}

/// Sufficient monotonicity test: `min_i a_i/b_i >= max_{S in F} h(S)`,
/// with the right-hand side solved by parametric fractional
/// maximization. Certifies `MonotoneSubmodular` when it holds and is
/// otherwise inconclusive (the test is not necessary).
pub fn check_monotone_sufficient(
    r: &Ratio,
    region: &FeasibleRegion,
    tol: f64,
) -> Result<CertificationReport> {
    let max_h = single_ratio_max(r, region, tol)?.value;
    let slack = r.min_item_ratio() - max_h;
    let verdict = if slack >= -tol {
        Verdict::MonotoneSubmodular
    } else {
        Verdict::Inconclusive
    };
    Ok(CertificationReport::certified(
        verdict,
        slack,
        Method::MonotoneBound,
        tol,
    ))
}

/// Closed-form monotonicity test over the unconstrained family:
/// `min_i a_i/b_i >= h(N)` holds if and only if the ratio is monotone
/// nondecreasing (and hence submodular) over `2^N`.
pub fn check_monotone_unconstrained(r: &Ratio, tol: f64) -> bool {
    monotone_unconstrained_report(r, tol).verdict == Verdict::MonotoneSubmodular
}

fn monotone_unconstrained_report(r: &Ratio, tol: f64) -> CertificationReport {
    let slack = r.min_item_ratio() - r.evaluate(Subset::full(r.n()));
    let verdict = if slack >= -tol {
        Verdict::MonotoneSubmodular
    } else {
        Verdict::Inconclusive
    };
    CertificationReport::certified(verdict, slack, Method::GlobalMonotoneBound, tol)
}

// Pairwise-distinct up to relative tolerance.
fn rel_distinct(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() > tol * x.abs().max(y.abs())
}

/// Obstruction for homogeneous ratios (`b0 = 0`): if some feasible set
/// contains three items with pairwise distinct marginal ratios, the
/// ratio is not submodular, and the violating quadruple is built from
/// the triple directly (base = the largest-ratio item, extended by the
/// other two). Inconclusive when the hypothesis is unmet, including
/// when the ratio is not homogeneous.
pub fn check_homogeneous_obstruction(
    r: &Ratio,
    region: &FeasibleRegion,
    tol: f64,
) -> CertificationReport {
    let n = r.n();
    let mut min_slack = f64::INFINITY;
    let mut argmin = None;
    if r.is_homogeneous() {
        for x in 1..=n {
            for y in (x + 1)..=n {
                for z in (y + 1)..=n {
                    let triple = Subset::EMPTY.with(x).with(y).with(z);
                    if !region.contains(triple) {
                        continue;
                    }
                    let (rx, ry, rz) = (r.item_ratio(x), r.item_ratio(y), r.item_ratio(z));
                    if !rel_distinct(rx, ry, tol)
                        || !rel_distinct(ry, rz, tol)
                        || !rel_distinct(rx, rz, tol)
                    {
                        continue;
                    }
                    // Sort the triple by marginal ratio; the greatest
                    // one anchors the base set.
                    let mut order = [(rx, x), (ry, y), (rz, z)];
                    order.sort_by(|u, v| u.0.total_cmp(&v.0));
                    let w = Witness {
                        base: Subset::EMPTY.with(order[2].1),
                        i: order[0].1,
                        j: order[1].1,
                    };
                    let slack = w.definition_slack(|s| r.evaluate(s));
                    if slack < min_slack {
                        min_slack = slack;
                        argmin = Some(w);
                    }
                }
            }
        }
    }
    if min_slack < -tol {
        CertificationReport {
            verdict: Verdict::NotSubmodular,
            witness: argmin,
            min_slack,
            method: Method::HomogeneousObstruction,
            marginal: false,
        }
    } else {
        CertificationReport::certified(
            Verdict::Inconclusive,
            min_slack,
            Method::HomogeneousObstruction,
            tol,
        )
    }
}

/// Structure check for certified-submodular ratios: writing `n*` for
/// the smallest-marginal-ratio item (largest index on ties), verifies
/// exhaustively that
///
/// 1. the ratio is monotone nondecreasing on `F1 = {S in F : n* in S}`,
///    and
/// 2. for `S` avoiding `n*` with `S ∪ {j, n*}` feasible (`j != n*`),
///    inserting `j` never decreases the value.
///
/// The union feasibility in 2 is what the certificate actually covers:
/// it reduces the claim to the pairwise inequality at the triple
/// `(S, j, n*)`, which the certificate quantifies only when
/// `S ∪ {j, n*}` is in the family. Over the unconstrained family it is
/// implied by the two single extensions being feasible.
///
/// Requires a prior submodularity certificate and `n <=` [`SCAN_LIMIT`].
pub fn check_near_monotone_structure(
    r: &Ratio,
    region: &FeasibleRegion,
    certificate: &CertificationReport,
    tol: f64,
) -> Result<bool> {
    if !certificate.verdict.is_submodular() {
        return Err(Error::NotCertifiedSubmodular);
    }
    scan_guard(r.n())?;
    let n = r.n();
    let star = r.min_ratio_item();
    let bstar = 1usize << (star - 1);
    let feas = FeasCheck::new(region, n);
    let vals = tabulate_ratio(r);
    let size = 1usize << n;
    for mask in 0..size {
        if !feas.contains(mask) {
            continue;
        }
        let in_f1 = mask & bstar != 0;
        for j in 1..=n {
            let bj = 1usize << (j - 1);
            if mask & bj != 0 || !feas.contains(mask | bj) {
                continue;
            }
            if in_f1 {
                if vals[mask | bj] < vals[mask] - tol {
                    return Ok(false);
                }
            } else if j != star
                && feas.contains(mask | bj | bstar)
                && vals[mask | bj] < vals[mask] - tol
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Certification ladder for one ratio: polynomial monotonicity tests
/// first, the exact pairwise scan while the ground set allows it, and
/// the homogeneous obstruction when `b0 = 0`.
pub fn certify_ratio(r: &Ratio, region: &FeasibleRegion, tol: f64) -> CertificationReport {
    if r.is_homogeneous() {
        let obstruction = check_homogeneous_obstruction(r, region, tol);
        if obstruction.verdict == Verdict::NotSubmodular {
            return obstruction;
        }
        if let Ok(mono) = check_monotone_sufficient(r, region, tol) {
            if mono.verdict == Verdict::MonotoneSubmodular {
                return mono;
            }
            if r.n() <= SCAN_LIMIT {
                if let Ok(scan) = check_submodular_definition(|s| r.evaluate(s), region, r.n(), tol)
                {
                    return scan;
                }
            }
            return mono;
        }
        return obstruction;
    }

    let mono = match region {
        FeasibleRegion::Unconstrained => monotone_unconstrained_report(r, tol),
        _ => match check_monotone_sufficient(r, region, tol) {
            Ok(report) => report,
            Err(_) => CertificationReport::certified(
                Verdict::Inconclusive,
                f64::NEG_INFINITY,
                Method::MonotoneBound,
                tol,
            ),
        },
    };
    if mono.verdict == Verdict::MonotoneSubmodular {
        return mono;
    }
    if r.n() <= SCAN_LIMIT {
        if let Ok(scan) = check_ratio_submodular(r, region, tol) {
            return scan;
        }
    }
    mono
}

/// Certifies every ratio of an instance and aggregates:
///
/// * all ratios monotone: the sum is monotone submodular;
/// * all ratios submodular: the sum is submodular (nonnegative sums
///   preserve submodularity);
/// * otherwise the definition scan runs on the sum itself when the
///   ground set allows; a violation there is conclusive, while a clean
///   scan leaves the aggregate inconclusive (one bad term does not make
///   the sum bad, but the per-ratio route no longer certifies it).
pub fn certify_instance(inst: &MultiRatioInstance, tol: f64) -> InstanceCertification {
    let per_ratio: Vec<CertificationReport> = inst
        .ratios()
        .iter()
        .map(|r| certify_ratio(r, inst.region(), tol))
        .collect();

    let min_slack = per_ratio
        .iter()
        .map(|c| c.min_slack)
        .fold(f64::INFINITY, f64::min);

    let aggregate = if per_ratio
        .iter()
        .all(|c| c.verdict == Verdict::MonotoneSubmodular)
    {
        CertificationReport::certified(
            Verdict::MonotoneSubmodular,
            min_slack,
            Method::PerRatioClosure,
            tol,
        )
    } else if per_ratio.iter().all(|c| c.verdict.is_submodular()) {
        CertificationReport::certified(Verdict::Submodular, min_slack, Method::PerRatioClosure, tol)
    } else if inst.n() <= SCAN_LIMIT {
        match check_submodular_definition(|s| inst.objective(s), inst.region(), inst.n(), tol) {
            Ok(scan) if scan.verdict == Verdict::NotSubmodular => CertificationReport {
                method: Method::AggregateScan,
                ..scan
            },
            Ok(scan) => CertificationReport::certified(
                Verdict::Inconclusive,
                scan.min_slack,
                Method::AggregateScan,
                tol,
            ),
            Err(_) => CertificationReport::certified(
                Verdict::Inconclusive,
                f64::NEG_INFINITY,
                Method::AggregateScan,
                tol,
            ),
        }
    } else {
        CertificationReport::certified(
            Verdict::Inconclusive,
            f64::NEG_INFINITY,
            Method::PerRatioClosure,
            tol,
        )
    };

    InstanceCertification {
        per_ratio,
        aggregate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = DEFAULT_TOLERANCE;

    fn example_ratio() -> Ratio {
        Ratio::new(vec![3.0, 2.0, 1.0], 2.0, vec![1.0, 1.0, 1.0]).unwrap()
    }

    #[test]
    fn example_ratio_is_submodular_but_not_monotone() {
        let r = example_ratio();
        let region = FeasibleRegion::Unconstrained;

        let def = check_submodular_definition(|s| r.evaluate(s), &region, r.n(), TOL).unwrap();
        assert_eq!(def.verdict, Verdict::Submodular);

        let pairwise = check_ratio_submodular(&r, &region, TOL).unwrap();
        assert_eq!(pairwise.verdict, Verdict::Submodular);

        assert!(!check_monotone_unconstrained(&r, TOL));
        let scan = check_monotone_definition(|s| r.evaluate(s), &region, r.n(), TOL).unwrap();
        assert!(!scan.monotone);
    }

    #[test]
    fn modular_functions_scan_with_zero_slack() {
        let c = [2.0, 1.0, 0.5];
        let f = |s: Subset| s.iter().map(|i| c[i - 1]).sum::<f64>();
        let report =
            check_submodular_definition(f, &FeasibleRegion::Unconstrained, 3, TOL).unwrap();
        assert_eq!(report.verdict, Verdict::Submodular);
        assert_eq!(report.min_slack, 0.0);
        assert!(!report.marginal);
    }

    #[test]
    fn homogeneous_three_distinct_ratios_violates_definition() {
        let r = Ratio::new(vec![1.0, 1.0, 1.0], 0.0, vec![1.0, 2.0, 4.0]).unwrap();
        let region = FeasibleRegion::Unconstrained;

        let def = check_submodular_definition(|s| r.evaluate(s), &region, 3, TOL).unwrap();
        assert_eq!(def.verdict, Verdict::NotSubmodular);
        let w = def.witness.expect("violation must carry a witness");
        assert!(w.definition_slack(|s| r.evaluate(s)) < -TOL);

        let obstruction = check_homogeneous_obstruction(&r, &region, TOL);
        assert_eq!(obstruction.verdict, Verdict::NotSubmodular);
        let w = obstruction.witness.unwrap();
        // Item 1 carries the largest marginal ratio and anchors the base.
        assert_eq!(w.base.indices(), vec![1]);
        assert_eq!((w.i, w.j), (3, 2));
        assert!(w.definition_slack(|s| r.evaluate(s)) < -TOL);
    }

    #[test]
    fn homogeneous_obstruction_needs_three_distinct_values() {
        let equal = Ratio::new(vec![1.0, 2.0, 4.0], 0.0, vec![1.0, 2.0, 4.0]).unwrap();
        let region = FeasibleRegion::Unconstrained;
        assert_eq!(
            check_homogeneous_obstruction(&equal, &region, TOL).verdict,
            Verdict::Inconclusive
        );

        let two = Ratio::new(vec![1.0, 1.0, 2.0], 0.0, vec![1.0, 1.0, 1.0]).unwrap();
        assert_eq!(
            check_homogeneous_obstruction(&two, &region, TOL).verdict,
            Verdict::Inconclusive
        );
    }

    #[test]
    fn pairwise_scan_rejects_homogeneous_input() {
        let r = Ratio::new(vec![1.0], 0.0, vec![1.0]).unwrap();
        assert_eq!(
            check_ratio_submodular(&r, &FeasibleRegion::Unconstrained, TOL),
            Err(Error::HomogeneousRatio)
        );
    }

    #[test]
    fn single_item_is_vacuously_submodular() {
        let r = Ratio::new(vec![2.0], 1.0, vec![1.0]).unwrap();
        let report = check_ratio_submodular(&r, &FeasibleRegion::Unconstrained, TOL).unwrap();
        assert_eq!(report.verdict, Verdict::Submodular);
        assert_eq!(report.min_slack, f64::INFINITY);
    }

    #[test]
    fn equal_ratios_with_positive_constant_are_monotone() {
        let r = Ratio::new(vec![1.0, 2.0, 3.0], 1.0, vec![1.0, 2.0, 3.0]).unwrap();
        let report = check_monotone_sufficient(&r, &FeasibleRegion::Unconstrained, TOL).unwrap();
        assert_eq!(report.verdict, Verdict::MonotoneSubmodular);
        assert!(check_monotone_unconstrained(&r, TOL));
    }

    #[test]
    fn monotone_sufficient_is_inconclusive_on_the_example() {
        let report =
            check_monotone_sufficient(&example_ratio(), &FeasibleRegion::Unconstrained, TOL)
                .unwrap();
        // min a_i/b_i = 1 while max h = 5/4.
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert!((report.min_slack - (1.0 - 1.25)).abs() < 1e-12);
    }

    #[test]
    fn near_monotone_structure_holds_for_the_example() {
        let r = example_ratio();
        let region = FeasibleRegion::Unconstrained;
        let cert = check_ratio_submodular(&r, &region, TOL).unwrap();
        assert!(check_near_monotone_structure(&r, &region, &cert, TOL).unwrap());
    }

    #[test]
    fn structure_check_requires_certificate() {
        let r = example_ratio();
        let region = FeasibleRegion::Unconstrained;
        let bogus = CertificationReport::certified(
            Verdict::Inconclusive,
            f64::NEG_INFINITY,
            Method::MonotoneBound,
            TOL,
        );
        assert_eq!(
            check_near_monotone_structure(&r, &region, &bogus, TOL),
            Err(Error::NotCertifiedSubmodular)
        );
    }

    #[test]
    fn certify_instance_aggregates_single_ratio() {
        let inst =
            MultiRatioInstance::new(vec![example_ratio()], FeasibleRegion::Unconstrained).unwrap();
        let cert = certify_instance(&inst, TOL);
        assert_eq!(cert.per_ratio.len(), 1);
        assert_eq!(cert.aggregate.verdict, cert.per_ratio[0].verdict);
    }

    #[test]
    fn certify_instance_all_monotone_closes_upward() {
        let monotone = Ratio::new(vec![1.0, 1.0], 1.0, vec![1.0, 1.0]).unwrap();
        let inst = MultiRatioInstance::new(
            vec![monotone.clone(), monotone],
            FeasibleRegion::Unconstrained,
        )
        .unwrap();
        let cert = certify_instance(&inst, TOL);
        assert_eq!(cert.aggregate.verdict, Verdict::MonotoneSubmodular);
        assert_eq!(cert.aggregate.method, Method::PerRatioClosure);
    }

    #[test]
    fn mixed_instance_falls_back_to_aggregate_scan() {
        // One clean monotone term plus a homogeneous term with three
        // distinct marginal ratios. The sum is dominated by the bad
        // term, so the aggregate scan finds a violation.
        let good = Ratio::new(vec![0.1, 0.1, 0.1], 1.0, vec![1.0, 1.0, 1.0]).unwrap();
        let bad = Ratio::new(vec![1.0, 1.0, 1.0], 0.0, vec![1.0, 2.0, 4.0]).unwrap();
        let inst = MultiRatioInstance::new(vec![good, bad], FeasibleRegion::Unconstrained).unwrap();
        let cert = certify_instance(&inst, TOL);
        assert_eq!(cert.aggregate.verdict, Verdict::NotSubmodular);
        assert_eq!(cert.aggregate.method, Method::AggregateScan);
        let w = cert.aggregate.witness.unwrap();
        assert!(w.definition_slack(|s| inst.objective(s)) < -TOL);
    }

    #[test]
    fn mixed_instance_with_clean_sum_stays_inconclusive() {
        // The homogeneous term has three distinct ratios but a strong
        // monotone term drowns the violation in the sum; the per-ratio
        // route fails while the aggregate scan finds nothing, so the
        // instance stays uncertified.
        let strong = Ratio::new(vec![50.0, 50.0, 50.0], 1.0, vec![1.0, 1.0, 1.0]).unwrap();
        let bad = Ratio::new(vec![1.0, 1.0, 1.0], 0.0, vec![1.0, 2.0, 4.0]).unwrap();
        let inst =
            MultiRatioInstance::new(vec![strong, bad], FeasibleRegion::Unconstrained).unwrap();
        let cert = certify_instance(&inst, TOL);
        assert_eq!(cert.aggregate.method, Method::AggregateScan);
        assert_eq!(cert.aggregate.verdict, Verdict::Inconclusive);
        assert!(cert.aggregate.min_slack >= -TOL);
    }

    #[test]
    fn knapsack_scans_agree_with_contains_at_float_boundaries() {
        // 0.1 + 0.2 + 0.3 folded in ascending order exceeds 0.6 by one
        // ulp, so the full set is infeasible; the scan's internal
        // feasibility table must sum in the same order as `contains`
        // or the quantified triple sets would differ.
        let region = FeasibleRegion::Knapsack {
            weights: vec![0.1, 0.2, 0.3],
            capacity: 0.6,
        };
        let full = Subset::full(3);
        assert!(!region.contains(full));

        let r = Ratio::new(vec![1.0, 1.0, 1.0], 0.0, vec![1.0, 2.0, 4.0]).unwrap();
        // Over all three items this homogeneous ratio violates the
        // definition, but the only violating triple needs the full set,
        // which this region excludes; the scan must certify.
        let scan = check_submodular_definition(|s| r.evaluate(s), &region, 3, TOL).unwrap();
        assert_eq!(scan.verdict, Verdict::Submodular);

        // Nudging the capacity up by one ulp readmits the full set and
        // with it the violation.
        let region = FeasibleRegion::Knapsack {
            weights: vec![0.1, 0.2, 0.3],
            capacity: 0.6000000000000001,
        };
        assert!(region.contains(full));
        let scan = check_submodular_definition(|s| r.evaluate(s), &region, 3, TOL).unwrap();
        assert_eq!(scan.verdict, Verdict::NotSubmodular);
    }

    #[test]
    fn scan_guard_rejects_large_ground_sets() {
        let f = |_: Subset| 0.0;
        assert!(matches!(
            check_submodular_definition(f, &FeasibleRegion::Unconstrained, 21, TOL),
            Err(Error::GroundSetTooLarge { n: 21, limit: 20 })
        ));
    }
}
