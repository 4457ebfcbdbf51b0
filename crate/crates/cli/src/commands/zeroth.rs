//! `zeroth`: transitivity experiments and failure-rate sweeps.

use serde::Serialize;

use bitthermo::bits::generate_bernoulli;
use bitthermo::equilibrium::{
    fit_exponential_envelope, transitivity_failure_sweep, zeroth_law_experiment, ExpEnvelope,
    SweepRow, TripleKind, ZerothLawReport,
};
use bitthermo::Seed;

use crate::args::Args;
use crate::defaults::Defaults;
use crate::error::CliError;
use crate::output::{csv_report, emit, json_report, RunConfig};

use super::resolve_estimator;

#[derive(Serialize)]
struct Params {
    t: f64,
    n: Option<usize>,
    n_grid: Option<Vec<usize>>,
    trials: u32,
    estimator: String,
    seed: u64,
    inject_duplicates: bool,
    format: String,
    out: Option<String>,
}

#[derive(Serialize)]
struct SingleReport {
    n: usize,
    trials: u32,
    failures: u32,
    rate: f64,
    ci_low: f64,
    ci_high: f64,
    first_violation: Option<ZerothLawReport>,
}

#[derive(Serialize)]
struct SweepReport<'a> {
    rows: &'a [SweepRow],
    fit: Option<ExpEnvelope>,
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        t: args.required("t")?,
        n: args.parsed("n")?,
        n_grid: args.parsed_list("n-grid")?,
        trials: args.parsed("trials")?.unwrap_or(defaults.trials),
        estimator: args
            .get("estimator")
            .unwrap_or(&defaults.estimator)
            .to_string(),
        seed: args.parsed("seed")?.unwrap_or(defaults.seed),
        inject_duplicates: args.switch("inject-duplicates"),
        format: args.get("format").unwrap_or("csv").to_string(),
        out: args.get("out").map(String::from),
    };
    args.finish()?;

    if !(0.0..=1.0).contains(&params.t) {
        return Err(CliError::Validation(format!(
            "--t {} outside [0, 1]",
            params.t
        )));
    }
    let estimator = resolve_estimator(&params.estimator)?;
    let kind = if params.inject_duplicates {
        TripleKind::DuplicateThird
    } else {
        TripleKind::Independent
    };
    let seed = Seed(params.seed);
    let config = RunConfig {
        command: "zeroth",
        params: &params,
        defaults,
    };

    match (&params.n, &params.n_grid) {
        (Some(n), None) => {
            // single length: JSON transitivity report
            if params.trials == 0 {
                return Err(CliError::Validation("--trials must be at least 1".into()));
            }
            let mut failures = 0u32;
            let mut first_violation = None;
            for trial in 0..params.trials {
                let trial_seed = seed.derive(trial as u64);
                let gen = |slot: u64| {
                    generate_bernoulli(*n, params.t, trial_seed.derive(slot))
                        .map_err(|e| CliError::Validation(e.to_string()))
                };
                let a = gen(0)?;
                let b = gen(1)?;
                let c = if params.inject_duplicates {
                    a.clone()
                } else {
                    gen(2)?
                };
                let report =
                    zeroth_law_experiment(&[a, b, c], estimator.as_ref(), defaults.pair_tol)
                        .map_err(|e| CliError::Estimator(e.to_string()))?;
                if !report.transitive {
                    failures += 1;
                    if first_violation.is_none() {
                        first_violation = Some(report);
                    }
                }
            }
            let (ci_low, ci_high) =
                bitthermo::equilibrium::wilson_interval(failures, params.trials);
            let report = SingleReport {
                n: *n,
                trials: params.trials,
                failures,
                rate: failures as f64 / params.trials as f64,
                ci_low,
                ci_high,
                first_violation,
            };
            emit(params.out.as_deref(), &json_report(&config, &report)?)
        }
        (None, Some(grid)) => {
            // Monte-Carlo failure-rate sweep over lengths
            if params.trials < 100 {
                return Err(CliError::Validation(
                    "sweeps need --trials >= 100 for usable intervals".into(),
                ));
            }
            let rows = transitivity_failure_sweep(
                params.t,
                grid,
                params.trials,
                kind,
                estimator.as_ref(),
                defaults.pair_tol,
                seed,
            )
            .map_err(|e| CliError::Estimator(e.to_string()))?;
            let fit = fit_exponential_envelope(&rows);
            let content = match params.format.as_str() {
                "json" => json_report(&config, &SweepReport { rows: &rows, fit })?,
                "csv" => {
                    let mut lines: Vec<String> = Vec::with_capacity(rows.len() + 1);
                    let fit_echo =
                        serde_json::to_string(&fit).map_err(|e| CliError::Io(e.to_string()))?;
                    lines.push(format!("# fit: {fit_echo}"));
                    lines.extend(rows.iter().map(|r| {
                        format!(
                            "{},{},{},{},{},{}",
                            r.n, r.trials, r.failures, r.rate, r.ci_low, r.ci_high
                        )
                    }));
                    csv_report(&config, "n,trials,failures,rate,ci_low,ci_high", &lines)?
                }
                other => return Err(CliError::Validation(format!("unknown format '{other}'"))),
            };
            emit(params.out.as_deref(), &content)
        }
        _ => Err(CliError::Validation(
            "exactly one of --n or --n-grid is required".into(),
        )),
    }
}
