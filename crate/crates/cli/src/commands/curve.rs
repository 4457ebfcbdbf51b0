//! `curve`: the temperature-vs-fraction table.

use serde::Serialize;

use bitthermo::temperature::{default_curve_grid, temperature_curve};

use crate::args::Args;
use crate::defaults::Defaults;
use crate::error::CliError;
use crate::output::{csv_report, emit, json_report, RunConfig};

#[derive(Serialize)]
struct Params {
    points: usize,
    format: String,
    out: Option<String>,
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        points: args.parsed("points")?.unwrap_or(defaults.curve_points),
        format: args.get("format").unwrap_or("csv").to_string(),
        out: args.get("out").map(String::from),
    };
    args.finish()?;
    if params.points < 1 {
        return Err(CliError::Validation("--points must be at least 1".into()));
    }

    let grid = default_curve_grid(params.points);
    let rows = temperature_curve(&grid).map_err(|e| CliError::Validation(e.to_string()))?;
    let config = RunConfig {
        command: "curve",
        params: &params,
        defaults,
    };
    let content = match params.format.as_str() {
        "csv" => {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| format!("{},{},{},{}", r.t, r.t_stat, r.inv_t_stat, r.flag))
                .collect();
            csv_report(&config, "t,T_stat,inv_T_stat,flag", &lines)?
        }
        "json" => json_report(&config, &rows)?,
        other => return Err(CliError::Validation(format!("unknown format '{other}'"))),
    };
    emit(params.out.as_deref(), &content)
}
