//! `temp`: both temperatures and the equilibrium verdict per input string.

use serde::Serialize;

use bitthermo::complexity::{
    delta_k_profile, probe_positions, structural_temperature, StrucTemperature,
};
use bitthermo::equilibrium::{is_heat_bath, DirectEntropyCheck, EquilibriumError};
use bitthermo::temperature::{statistical_temperature, StatTemperature, TempFlag};
use bitthermo::Seed;

use crate::args::Args;
use crate::defaults::{equilibrium_config, Defaults};
use crate::error::CliError;
use crate::output::{csv_report, emit, json_report, RunConfig};

use super::{read_strings, resolve_estimator};

#[derive(Serialize)]
struct Params {
    #[serde(rename = "in")]
    input: String,
    estimator: String,
    probe_budget: usize,
    seed: u64,
    packed: bool,
    out: Option<String>,
    dk_csv: Option<String>,
}

/// Structural temperature with the argmax set summarized.
#[derive(Serialize)]
struct StrucSummary {
    value: f64,
    inverse_bits: f64,
    max_delta_k_bits: f64,
    sample_size: usize,
    sampled: bool,
    sample_seed: Option<Seed>,
    flag: TempFlag,
    argmax_count: usize,
    argmax_first: Vec<usize>,
}

impl From<StrucTemperature> for StrucSummary {
    fn from(st: StrucTemperature) -> Self {
        StrucSummary {
            value: st.value,
            inverse_bits: st.inverse_bits,
            max_delta_k_bits: st.max_delta_k_bits,
            sample_size: st.sample_size,
            sampled: st.sampled,
            sample_seed: st.sample_seed,
            flag: st.flag,
            argmax_count: st.positions_arg.len(),
            argmax_first: st.positions_arg.iter().copied().take(8).collect(),
        }
    }
}

#[derive(Serialize)]
struct EquilibriumSummary {
    is_heat_bath: bool,
    relative_gap: f64,
    tolerance: f64,
    flag: TempFlag,
    direct: DirectEntropyCheck,
}

#[derive(Serialize)]
struct TempReport {
    index: usize,
    n: usize,
    weight: usize,
    hamming_fraction: f64,
    statistical: StatTemperature,
    structural: Option<StrucSummary>,
    equilibrium: Option<EquilibriumSummary>,
    note: Option<String>,
}

pub fn run(args: &Args, defaults: &Defaults) -> Result<(), CliError> {
    let params = Params {
        input: args.required("in")?,
        estimator: args
            .get("estimator")
            .unwrap_or(&defaults.estimator)
            .to_string(),
        probe_budget: args
            .parsed("probe-budget")?
            .unwrap_or(defaults.probe_budget),
        seed: args.parsed("seed")?.unwrap_or(defaults.seed),
        packed: args.switch("packed"),
        out: args.get("out").map(String::from),
        dk_csv: args.get("dk-csv").map(String::from),
    };
    args.finish()?;

    let estimator = resolve_estimator(&params.estimator)?;
    let strings = read_strings(&params.input, params.packed)?;
    let mut cfg = equilibrium_config(defaults);
    cfg.probe_budget = params.probe_budget;
    let seed = Seed(params.seed);

    let mut reports = Vec::with_capacity(strings.len());
    for (index, s) in strings.iter().enumerate() {
        let statistical = statistical_temperature(s.hamming_fraction())
            .expect("fraction of a string is in [0,1]");
        let string_seed = seed.derive(index as u64);
        let structural = structural_temperature(
            s,
            estimator.as_ref(),
            params.probe_budget,
            string_seed,
            defaults.dk_floor,
        );
        let (structural, mut note) = match structural {
            Ok(st) => (Some(StrucSummary::from(st)), None),
            Err(e) => (None, Some(e.to_string())),
        };
        let equilibrium = match is_heat_bath(s, estimator.as_ref(), string_seed, &cfg) {
            Ok(v) => Some(EquilibriumSummary {
                is_heat_bath: v.is_heat_bath,
                relative_gap: v.relative_gap,
                tolerance: v.tolerance,
                flag: v.flag,
                direct: v.direct,
            }),
            Err(EquilibriumError::TooShort { n, min }) => {
                note = Some(format!(
                    "no equilibrium verdict: length {n} below minimum {min}"
                ));
                None
            }
            Err(_) => None,
        };
        reports.push(TempReport {
            index,
            n: s.len(),
            weight: s.weight(),
            hamming_fraction: s.hamming_fraction(),
            statistical,
            structural,
            equilibrium,
            note,
        });
    }

    let config = RunConfig {
        command: "temp",
        params: &params,
        defaults,
    };

    // per-flip complexity profile over the probed positions, as CSV
    if let Some(dk_path) = &params.dk_csv {
        let mut rows = Vec::new();
        for (index, s) in strings.iter().enumerate() {
            let Ok((positions, _)) =
                probe_positions(s, params.probe_budget, seed.derive(index as u64))
            else {
                continue; // all-ones strings carry no probe; noted in the report
            };
            let profile = delta_k_profile(s, &positions, estimator.as_ref())
                .expect("probe positions are in range");
            rows.extend(
                profile
                    .iter()
                    .map(|dk| format!("{index},{},{}", dk.position, dk.delta_bits)),
            );
        }
        std::fs::write(
            dk_path,
            csv_report(&config, "string,position,deltaK_bits", &rows)?,
        )?;
    }

    emit(params.out.as_deref(), &json_report(&config, &reports)?)
}
