//! Versioned run defaults, echoed verbatim into every output so each
//! reported number can be traced to the knobs that produced it.

use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Defaults {
    pub version: u32,
    pub enumeration_cap: u64,
    pub probe_budget: usize,
    pub dk_floor: f64,
    pub min_heat_bath_len: usize,
    pub rel_tol: f64,
    pub direct_tol: f64,
    pub pair_tol: f64,
    pub curve_points: usize,
    pub estimator: String,
    pub seed: u64,
    pub trials: u32,
    pub zeroth_n_grid: Vec<usize>,
}

const BUILTIN: &str = include_str!("../defaults.json");

impl Defaults {
    pub fn builtin() -> Defaults {
        serde_json::from_str(BUILTIN).expect("embedded defaults.json is valid")
    }

    pub fn from_file(path: &str) -> Result<Defaults, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Validation(format!("defaults file {path}: {e}")))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Validation(format!("defaults file {path}: {e}")))
    }
}

/// Equilibrium configuration drawn from the defaults.
pub fn equilibrium_config(d: &Defaults) -> bitthermo::equilibrium::EquilibriumConfig {
    bitthermo::equilibrium::EquilibriumConfig {
        rel_tol: d.rel_tol,
        direct_tol: d.direct_tol,
        pair_tol: d.pair_tol,
        min_len: d.min_heat_bath_len,
        probe_budget: d.probe_budget,
        dk_floor: d.dk_floor,
    }
}
