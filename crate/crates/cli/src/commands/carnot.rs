//! `carnot`: engine runs and cold-sink sweeps.

use serde::Serialize;

use bitthermo::carnot::carnot_run;
use bitthermo::temperature::CountMode;

use crate::args::Args;
use crate::defaults::Defaults;
use crate::error::CliError;
use crate::output::{emit, json_report, RunConfig};

#[derive(Serialize)]
struct Params {
    n: usize,
    t1: f64,
    t2: Vec<f64>,
    d1: usize,
    mode: String,
    out: Option<String>,
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        n: args.required("n")?,
        t1: args.required("t1")?,
        t2: args
            .parsed_list("t2")?
            .ok_or_else(|| CliError::Validation("--t2 is required".into()))?,
        d1: args.required("d1")?,
        mode: args.get("mode").unwrap_or("exact").to_string(),
        out: args.get("out").map(String::from),
    };
    args.finish()?;

    let mode = match params.mode.as_str() {
        "exact" => CountMode::Exact,
        "asymptotic" => CountMode::Asymptotic,
        other => return Err(CliError::Validation(format!("unknown mode '{other}'"))),
    };
    if params.t2.is_empty() {
        return Err(CliError::Validation("--t2 needs at least one value".into()));
    }

    let outcomes: Vec<_> = params
        .t2
        .iter()
        .map(|&t2| carnot_run(params.n, params.t1, t2, params.d1, mode))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Validation(e.to_string()))?;

    let single_infeasible = outcomes.len() == 1 && !outcomes[0].feasible;
    let config = RunConfig {
        command: "carnot",
        params: &params,
        defaults,
    };
    let content = json_report(&config, &outcomes)?;
    emit(params.out.as_deref(), &content)?;
    if single_infeasible {
        return Err(CliError::Infeasible(format!(
            "no deposit d2 <= {} keeps the map injective",
            params.d1
        )));
    }
    Ok(())
}
