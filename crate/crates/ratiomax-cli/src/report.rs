//! Plain-text report rendering. Everything printed here is a pure
//! function of the inputs, so fixed-seed runs are byte-identical.

use std::fmt::Write;

use ratiomax::{
    check_monotone_definition, CertificationReport, Guarantee, InstanceCertification,
    MultiRatioInstance, Verdict, Witness, SCAN_LIMIT,
};

/// Shortest round-tripping decimal for objective values.
pub fn fmt_value(v: f64) -> String {
    format!("{v}")
}

/// Fixed-width scientific notation for slacks and margins.
pub fn fmt_slack(v: f64) -> String {
    format!("{v:.6e}")
}

/// Kebab-cased verdict for key=value report lines.
pub fn verdict_tag(v: Verdict) -> &'static str {
    match v {
        Verdict::Submodular => "submodular",
        Verdict::NotSubmodular => "not-submodular",
        Verdict::MonotoneSubmodular => "monotone-submodular",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn witness_lines(out: &mut String, w: &Witness, replayed: f64) {
    writeln!(out, "  witness: S={} i={} j={}", w.base, w.i, w.j).unwrap();
    writeln!(
        out,
        "  violated: f(S+i) + f(S+j) - f(S+i+j) - f(S) = {}",
        fmt_slack(replayed)
    )
    .unwrap();
}

fn report_line(out: &mut String, label: &str, report: &CertificationReport) {
    let marginal = if report.marginal {
        " (marginal slack)"
    } else {
        ""
    };
    writeln!(
        out,
        "{label}: {} [{}] min_slack={}{marginal}",
        report.verdict,
        report.method,
        fmt_slack(report.min_slack)
    )
    .unwrap();
}

/// Renders the per-ratio and aggregate certification of a core
/// instance, including an exact monotonicity line when the ground set
/// permits the scan.
pub fn render_certification(
    out: &mut String,
    core: &MultiRatioInstance,
    cert: &InstanceCertification,
    tolerance: f64,
) {
    for (k, report) in cert.per_ratio.iter().enumerate() {
        report_line(out, &format!("ratio {}", k + 1), report);
        if let Some(w) = &report.witness {
            let ratio = core.ratio(k);
            witness_lines(out, w, w.definition_slack(|s| ratio.evaluate(s)));
        }
    }
    report_line(out, "aggregate", &cert.aggregate);
    if let Some(w) = &cert.aggregate.witness {
        witness_lines(out, w, w.definition_slack(|s| core.objective(s)));
    }

    let monotonicity = if cert.aggregate.verdict == Verdict::MonotoneSubmodular {
        "monotone nondecreasing (certified)".to_string()
    } else if core.n() <= SCAN_LIMIT {
        let scan =
            check_monotone_definition(|s| core.objective(s), core.region(), core.n(), tolerance)
                .expect("scan limit checked");
        if scan.monotone {
            "monotone nondecreasing (exhaustive scan)".to_string()
        } else {
            match scan.witness {
                Some((s, j)) => format!("not monotone (exhaustive scan: inserting {j} at S={s} decreases the objective)"),
                None => "not monotone (exhaustive scan)".to_string(),
            }
        }
    } else {
        "not established (ground set too large for the exhaustive scan)".to_string()
    };
    writeln!(out, "monotonicity: {monotonicity}").unwrap();
}

/// Exit code for a certification verdict: 0 certified submodular,
/// 2 not submodular, 3 inconclusive (input errors exit 1 elsewhere).
pub fn verdict_exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Submodular | Verdict::MonotoneSubmodular => 0,
        Verdict::NotSubmodular => 2,
        Verdict::Inconclusive => 3,
    }
}

pub fn describe_bound(bound: Option<&Guarantee>) -> String {
    match bound {
        Some(g) => format!("{} ({})", fmt_value(g.factor()), g.describe()),
        None => "none".to_string(),
    }
}

/// greedy/optimum with the all-zero case pinned to 1.
pub fn empirical_ratio(greedy: f64, optimum: f64) -> f64 {
    if optimum == 0.0 {
        if greedy == 0.0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        greedy / optimum
    }
}
