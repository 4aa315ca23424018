//! Command implementations. Each returns the report text and the
//! process exit code; writing to stdout or `--output` happens in main.

use std::fmt::Write;

use clap::ValueEnum;

use ratiomax::{
    brute_force_maximize, certify_instance, greedy_maximize, guarantee_for, ENUMERATION_LIMIT,
};

use crate::gen::{generate, GenSpec};
use crate::io::{CliError, InstanceFile, LoadedInstance};
use crate::report::{
    describe_bound, empirical_ratio, fmt_value, render_certification, verdict_exit_code,
    verdict_tag,
};

/// Which solver(s) a solve or batch run executes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Greedy,
    Brute,
    Both,
}

impl SolveMethod {
    pub fn wants_greedy(self) -> bool {
        matches!(self, SolveMethod::Greedy | SolveMethod::Both)
    }

    pub fn wants_brute(self) -> bool {
        matches!(self, SolveMethod::Brute | SolveMethod::Both)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub method: SolveMethod,
    pub tolerance: f64,
    /// Override for the homogenization parameter of facility instances.
    pub delta: Option<f64>,
    /// Recorded in the header when given; the solvers themselves are
    /// deterministic.
    pub seed: Option<u64>,
}

/// Certifies an instance file and renders the report. Exit codes:
/// 0 certified submodular, 2 not submodular, 3 inconclusive.
pub fn certify_report(
    file: &InstanceFile,
    source: &str,
    tolerance: f64,
) -> Result<(String, i32), CliError> {
    let loaded = file.to_core(None)?;
    let core = loaded.as_multi_ratio();
    let mut out = String::new();
    writeln!(out, "instance: {source}").unwrap();
    writeln!(out, "kind: {}", loaded.describe()).unwrap();
    writeln!(out, "tolerance: {tolerance:e}").unwrap();

    let cert = certify_instance(&core, tolerance);
    render_certification(&mut out, &core, &cert, tolerance);

    let code = verdict_exit_code(cert.aggregate.verdict);
    let status = match code {
        0 => "certified submodular",
        2 => "not submodular",
        _ => "inconclusive",
    };
    writeln!(out, "status: {status}").unwrap();
    Ok((out, code))
}

/// Solves an instance file with the requested method(s).
pub fn solve_report(
    file: &InstanceFile,
    source: &str,
    opts: &SolveOptions,
) -> Result<(String, i32), CliError> {
    let loaded = file.to_core(opts.delta)?;
    let mut out = String::new();
    writeln!(out, "instance: {source}").unwrap();
    writeln!(out, "kind: {}", loaded.describe()).unwrap();
    writeln!(out, "tolerance: {:e}", opts.tolerance).unwrap();
    let method = opts
        .method
        .to_possible_value()
        .expect("solve methods are never skipped")
        .get_name()
        .to_string();
    writeln!(out, "method: {method}").unwrap();
    if let Some(seed) = opts.seed {
        writeln!(out, "seed: {seed}").unwrap();
    }

    match &loaded {
        LoadedInstance::PChoice(inst) => {
            if opts.method.wants_brute() && inst.n() > ENUMERATION_LIMIT {
                return Err(ratiomax::Error::GroundSetTooLarge {
                    n: inst.n(),
                    limit: ENUMERATION_LIMIT,
                }
                .into());
            }
            let solution = inst.solve(opts.tolerance)?;
            writeln!(
                out,
                "certification: {}",
                verdict_tag(solution.certification.aggregate.verdict)
            )
            .unwrap();
            let held = solution.condition_checks.iter().filter(|c| c.holds).count();
            writeln!(
                out,
                "monotone relaxation: {} ({held}/{} demand-point checks hold)",
                if solution.relaxation_justified {
                    "justified"
                } else {
                    "not justified"
                },
                solution.condition_checks.len()
            )
            .unwrap();
            if opts.method.wants_greedy() {
                writeln!(
                    out,
                    "greedy: S={} value={} (reached size p: {})",
                    solution.result.set,
                    fmt_value(solution.result.value),
                    if solution.reached_size_p { "yes" } else { "no" }
                )
                .unwrap();
                writeln!(out, "insertion order: {}", order_string(&solution.trace)).unwrap();
            }
            if opts.method.wants_brute() {
                let brute = solution
                    .brute_force
                    .as_ref()
                    .expect("size guard checked above");
                writeln!(
                    out,
                    "brute: S={} value={}",
                    brute.set,
                    fmt_value(brute.value)
                )
                .unwrap();
                if opts.method == SolveMethod::Both {
                    writeln!(
                        out,
                        "ratio greedy/brute: {}",
                        fmt_value(empirical_ratio(solution.result.value, brute.value))
                    )
                    .unwrap();
                }
            }
            writeln!(
                out,
                "declared bound: {}",
                describe_bound(solution.result.bound.as_ref())
            )
            .unwrap();
        }
        _ => {
            let core = loaded.as_multi_ratio();
            let cert = certify_instance(&core, opts.tolerance);
            writeln!(
                out,
                "certification: {}",
                verdict_tag(cert.aggregate.verdict)
            )
            .unwrap();

            let mut greedy_value = None;
            if opts.method.wants_greedy() {
                let trace = greedy_maximize(&core);
                let (set, value) = trace.recommended();
                greedy_value = Some(value);
                writeln!(out, "greedy: S={set} value={}", fmt_value(value)).unwrap();
                writeln!(
                    out,
                    "greedy final: S={} value={} (insertion order: {})",
                    trace.final_set,
                    fmt_value(trace.final_value),
                    order_string(&trace)
                )
                .unwrap();
            }
            let mut brute_value = None;
            if opts.method.wants_brute() {
                let brute = brute_force_maximize(&core)?;
                brute_value = Some(brute.value);
                writeln!(
                    out,
                    "brute: S={} value={}",
                    brute.set,
                    fmt_value(brute.value)
                )
                .unwrap();
            }
            if let (Some(g), Some(b)) = (greedy_value, brute_value) {
                writeln!(
                    out,
                    "ratio greedy/brute: {}",
                    fmt_value(empirical_ratio(g, b))
                )
                .unwrap();
            }
            writeln!(
                out,
                "declared bound: {}",
                describe_bound(guarantee_for(&core, &cert).as_ref())
            )
            .unwrap();

            if let LoadedInstance::Mmnl(inst) = &loaded {
                let baseline = inst.revenue_ordered_baseline();
                writeln!(
                    out,
                    "revenue-ordered baseline: S={} value={} bound={}",
                    baseline.set,
                    fmt_value(baseline.value),
                    describe_bound(baseline.bound.as_ref())
                )
                .unwrap();
            }
        }
    }
    Ok((out, 0))
}

fn order_string(trace: &ratiomax::GreedyTrace) -> String {
    let items: Vec<String> = trace.steps.iter().map(|s| s.item.to_string()).collect();
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(",")
    }
}

/// Renders the generated instance JSON.
pub fn generate_report(spec: &GenSpec, seed: u64) -> Result<(String, i32), CliError> {
    let file = generate(spec, seed)?;
    Ok((file.to_json(), 0))
}

/// Generates `count` instances with seeds `start_seed..start_seed+count`,
/// certifies and solves each, and emits one line per instance plus a
/// summary.
pub fn batch_report(
    spec: &GenSpec,
    start_seed: u64,
    count: usize,
    method: SolveMethod,
    tolerance: f64,
) -> Result<(String, i32), CliError> {
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    if method.wants_brute() && spec.n > ENUMERATION_LIMIT {
        return Err(CliError::Usage(format!(
            "brute force needs n <= {ENUMERATION_LIMIT}, got {}",
            spec.n
        )));
    }

    let mut out = String::new();
    let mut certified = 0usize;
    let mut spread_all = 0usize;
    let mut card_ok_count = 0usize;
    let mut relax_ok = 0usize;
    let mut bound_violations = 0usize;
    let mut min_ratio = f64::INFINITY;

    for offset in 0..count {
        let seed = start_seed + offset as u64;
        let file = generate(spec, seed)?;
        let loaded = file.to_core(None)?;
        write!(out, "seed={seed}").unwrap();

        let (verdict, greedy_value, brute_value, bound_factor) = match &loaded {
            LoadedInstance::PChoice(inst) => {
                let solution = inst.solve(tolerance)?;
                if solution.relaxation_justified {
                    relax_ok += 1;
                }
                write!(
                    out,
                    " relax={}",
                    if solution.relaxation_justified {
                        "yes"
                    } else {
                        "no"
                    }
                )
                .unwrap();
                let brute = if method.wants_brute() {
                    Some(
                        solution
                            .brute_force
                            .as_ref()
                            .expect("size guard checked above")
                            .value,
                    )
                } else {
                    None
                };
                (
                    solution.certification.aggregate.verdict,
                    method.wants_greedy().then_some(solution.result.value),
                    brute,
                    solution.result.bound.map(|b| b.factor()),
                )
            }
            _ => {
                let core = loaded.as_multi_ratio();
                let cert = certify_instance(&core, tolerance);
                if let LoadedInstance::Mmnl(inst) = &loaded {
                    let passing = (0..inst.num_segments())
                        .filter(|&k| {
                            inst.check_revenue_spread(k, tolerance)
                                .map(|c| c.holds)
                                .unwrap_or(false)
                        })
                        .count();
                    if passing == inst.num_segments() {
                        spread_all += 1;
                    }
                    write!(out, " spread_ok={passing}/{}", inst.num_segments()).unwrap();
                    match inst.region() {
                        ratiomax::FeasibleRegion::Cardinality(p) => {
                            let ok = inst.check_cardinality_ratio_condition(*p, tolerance)?.holds;
                            if ok {
                                card_ok_count += 1;
                            }
                            write!(out, " card_ok={}", if ok { "yes" } else { "no" }).unwrap();
                        }
                        _ => write!(out, " card_ok=n/a").unwrap(),
                    }
                }
                let greedy = method
                    .wants_greedy()
                    .then(|| greedy_maximize(&core).recommended().1);
                let brute = if method.wants_brute() {
                    Some(brute_force_maximize(&core)?.value)
                } else {
                    None
                };
                (
                    cert.aggregate.verdict,
                    greedy,
                    brute,
                    guarantee_for(&core, &cert).map(|b| b.factor()),
                )
            }
        };

        if verdict.is_submodular() {
            certified += 1;
        }
        write!(out, " verdict={}", verdict_tag(verdict)).unwrap();
        if let Some(g) = greedy_value {
            write!(out, " greedy={}", fmt_value(g)).unwrap();
        }
        if let Some(b) = brute_value {
            write!(out, " brute={}", fmt_value(b)).unwrap();
        }
        if let (Some(g), Some(b)) = (greedy_value, brute_value) {
            let ratio = empirical_ratio(g, b);
            min_ratio = min_ratio.min(ratio);
            write!(out, " ratio={ratio:.6}").unwrap();
            if let Some(factor) = bound_factor {
                if g < factor * b - 1e-9 {
                    bound_violations += 1;
                }
            }
        }
        match bound_factor {
            Some(factor) => write!(out, " bound={factor:.6}").unwrap(),
            None => write!(out, " bound=none").unwrap(),
        }
        writeln!(out).unwrap();
    }

    write!(out, "summary: count={count} certified={certified}").unwrap();
    match spec.kind {
        crate::gen::Kind::Mmnl => {
            write!(out, " spread_all={spread_all}").unwrap();
            if matches!(spec.region, crate::gen::RegionSpec::Cardinality(_)) {
                write!(out, " card_ok={card_ok_count}").unwrap();
            }
        }
        crate::gen::Kind::Pchoice => write!(out, " relax_ok={relax_ok}").unwrap(),
        crate::gen::Kind::Multiratio => {}
    }
    if min_ratio.is_finite() {
        write!(out, " min_ratio={min_ratio:.6}").unwrap();
    }
    writeln!(out, " bound_violations={bound_violations}").unwrap();
    Ok((out, 0))
}
