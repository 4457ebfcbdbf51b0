//! Structural temperature: complexity response to added energy.
//!
//! Probes single-bit 0-to-1 flips (the finest energy increment, one unit of
//! energy, change of fraction 1/n) and maximizes the resulting complexity
//! change over the probed positions. Two scales are reported:
//!
//! - `inverse_bits`, the raw maximand (complexity change per unit change of
//!   fraction, i.e. n times the per-flip change) — the quantity that grows
//!   like n·log n for structurally cold strings such as 0101…;
//! - `max_delta_k_bits`, the per-flip change itself, which measures the
//!   complexity change per unit of *energy* and is therefore the scale on
//!   which heat baths satisfy 1/T_struc = 1/T_stat = h'(t). The reported
//!   `value` is its reciprocal so that equilibrium comparisons against
//!   [`StatTemperature`](crate::temperature::StatTemperature) are direct.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitString;
use crate::rng::Seed;
use crate::temperature::TempFlag;

use super::ComplexityEstimator;

/// Changes smaller than one estimator resolution step are clamped before
/// division and the result is flagged divergent.
pub const DEFAULT_DK_FLOOR: f64 = 1.0;

/// Errors from structural-temperature probing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrucError {
    /// All-ones input: no 0-to-1 flip exists, so no positive energy probe.
    NoPositiveProbe,
    /// probe_budget must be at least 1.
    EmptyBudget,
}

impl fmt::Display for StrucError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StrucError::NoPositiveProbe => {
                write!(f, "all-ones string admits no 0->1 probe")
            }
            StrucError::EmptyBudget => write!(f, "probe budget must be at least 1"),
        }
    }
}

impl core::error::Error for StrucError {}

/// Structural temperature measurement.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StrucTemperature {
    /// Reciprocal of `max_delta_k_bits` (clamped at the resolution floor
    /// when flagged divergent). Same scale and sign conventions as the
    /// statistical temperature.
    pub value: f64,
    /// Maximum complexity change per unit change of Hamming fraction:
    /// n · max_delta_k_bits.
    pub inverse_bits: f64,
    /// Maximum per-flip complexity change found, in bits.
    pub max_delta_k_bits: f64,
    /// Number of flip positions probed.
    pub sample_size: usize,
    /// Probed positions achieving the maximum, ascending.
    pub positions_arg: Vec<usize>,
    /// True when the zero positions exceeded the budget and a seeded sample
    /// was probed instead; the maximum is then a lower bound on the true one.
    pub sampled: bool,
    /// Seed recorded when sampling was used.
    pub sample_seed: Option<Seed>,
    pub flag: TempFlag,
}

/// The energy-adding probe set: every zero position when there are at most
/// `probe_budget` of them, otherwise a uniform seeded sample of exactly
/// `probe_budget` positions (second return true). Ascending either way.
pub fn probe_positions(
    s: &BitString,
    probe_budget: usize,
    seed: Seed,
) -> Result<(Vec<usize>, bool), StrucError> {
    if probe_budget == 0 {
        return Err(StrucError::EmptyBudget);
    }
    let zeros = s.zero_positions();
    if zeros.is_empty() {
        return Err(StrucError::NoPositiveProbe);
    }
    let (mut probes, sampled) = if zeros.len() <= probe_budget {
        (zeros, false)
    } else {
        // partial Fisher-Yates: the first probe_budget entries become a
        // uniform sample without replacement
        let mut pool = zeros;
        let mut rng = seed.rng();
        for i in 0..probe_budget {
            let j = i + rng.below((pool.len() - i) as u64) as usize;
            pool.swap(i, j);
        }
        pool.truncate(probe_budget);
        (pool, true)
    };
    probes.sort_unstable();
    Ok((probes, sampled))
}

/// Measure the structural temperature of `s` under estimator `e`.
///
/// Probes the [`probe_positions`] set. Deterministic given (input,
/// estimator, budget, seed); ties in the maximum resolve to the lowest
/// position.
pub fn structural_temperature(
    s: &BitString,
    e: &dyn ComplexityEstimator,
    probe_budget: usize,
    seed: Seed,
    dk_floor: f64,
) -> Result<StrucTemperature, StrucError> {
    let (probes, sampled) = probe_positions(s, probe_budget, seed)?;

    let base = e.description_bits(s);
    let mut max_delta = f64::NEG_INFINITY;
    let mut argmax: Vec<usize> = Vec::new();
    for &p in &probes {
        let delta = e.description_bits(&s.with_flipped(p)) - base;
        if delta > max_delta {
            max_delta = delta;
            argmax.clear();
            argmax.push(p);
        } else if delta == max_delta {
            argmax.push(p);
        }
    }

    let n = s.len() as f64;
    let (value, flag) = if max_delta.abs() < dk_floor {
        let sign = if max_delta >= 0.0 { 1.0 } else { -1.0 };
        (1.0 / (sign * dk_floor), TempFlag::Divergent)
    } else {
        (1.0 / max_delta, TempFlag::Ok)
    };

    Ok(StrucTemperature {
        value,
        inverse_bits: n * max_delta,
        max_delta_k_bits: max_delta,
        sample_size: probes.len(),
        positions_arg: argmax,
        sampled,
        sample_seed: sampled.then_some(seed),
        flag,
    })
}
