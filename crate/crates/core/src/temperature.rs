//! Statistical temperature of a string and the two-level occupancy law.
//!
//! The inverse statistical temperature of a string at Hamming fraction t is
//! h'(t) = log2((1-t)/t): positive below t = 1/2, zero (temperature pole) at
//! t = 1/2, negative above. Base-2 conventions are used throughout so that
//! [`statistical_temperature`] and [`occupancy_from_temperature`] are exact
//! inverses; the natural-log variant differs only by a constant absorbed
//! into the reduced temperature.

use alloc::vec::Vec;
use core::fmt;

use crate::binom::log2_binomial;
use crate::bits::Macrostate;
use crate::entropy::{binary_entropy, entropy_derivative, DomainError};

/// Qualifier attached to temperature values at special fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum TempFlag {
    /// Finite, well-defined temperature.
    Ok,
    /// Pole at t = 1/2 (or an unresolvable estimator quantization): the
    /// value is a placeholder and must not feed further arithmetic.
    Divergent,
    /// t = 0 or t = 1; signed-zero temperature by the limit of the formula.
    Boundary,
}

impl fmt::Display for TempFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TempFlag::Ok => "ok",
            TempFlag::Divergent => "divergent",
            TempFlag::Boundary => "boundary",
        })
    }
}

/// Statistical temperature with its inverse (in bits) and a flag.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct StatTemperature {
    /// 1 / h'(t). Signed zero at the boundaries, +inf placeholder at the
    /// pole; consult `flag` before doing arithmetic.
    pub value: f64,
    /// h'(t) in bits; this is the quantity all equilibrium comparisons use.
    pub inverse_beta_bits: f64,
    pub flag: TempFlag,
}

/// Statistical temperature of a Hamming fraction.
pub fn statistical_temperature(t: f64) -> Result<StatTemperature, DomainError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(DomainError {
            what: "statistical_temperature fraction",
            value: t,
        });
    }
    if t == 0.0 {
        return Ok(StatTemperature {
            value: 0.0,
            inverse_beta_bits: f64::INFINITY,
            flag: TempFlag::Boundary,
        });
    }
    if t == 1.0 {
        return Ok(StatTemperature {
            value: -0.0,
            inverse_beta_bits: f64::NEG_INFINITY,
            flag: TempFlag::Boundary,
        });
    }
    let inverse = entropy_derivative(t).expect("t in (0,1)");
    if inverse == 0.0 {
        return Ok(StatTemperature {
            value: f64::INFINITY,
            inverse_beta_bits: 0.0,
            flag: TempFlag::Divergent,
        });
    }
    Ok(StatTemperature {
        value: 1.0 / inverse,
        inverse_beta_bits: inverse,
        flag: TempFlag::Ok,
    })
}

/// Occupied fraction of the upper level at reduced temperature `t_prime`,
/// t = 2^(-1/T') / (1 + 2^(-1/T')). Exact inverse of
/// [`statistical_temperature`] away from the pole.
pub fn occupancy_from_temperature(t_prime: f64) -> Result<f64, DomainError> {
    if t_prime == 0.0 || t_prime.is_nan() {
        return Err(DomainError {
            what: "reduced temperature",
            value: t_prime,
        });
    }
    // 1 / (1 + 2^(1/T')) is stable on both signs of T'.
    Ok(1.0 / (1.0 + libm::exp2(1.0 / t_prime)))
}

/// Exact or Stirling-asymptotic counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CountMode {
    Exact,
    Asymptotic,
}

impl fmt::Display for CountMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMode::Exact => "exact",
            CountMode::Asymptotic => "asymptotic",
        })
    }
}

/// Microstate count of a macrostate, in bits: log2 C(n, k) exactly, or the
/// n·h(k/n) asymptotic.
pub fn microstate_count_bits(m: Macrostate, mode: CountMode) -> f64 {
    match mode {
        CountMode::Exact => log2_binomial(m.n(), m.k()).expect("macrostate weight <= length"),
        CountMode::Asymptotic => {
            m.n() as f64 * binary_entropy(m.hamming_fraction()).expect("fraction in [0,1]")
        }
    }
}

/// One row of the temperature-vs-fraction table.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CurvePoint {
    pub t: f64,
    pub t_stat: f64,
    pub inv_t_stat: f64,
    pub flag: TempFlag,
}

/// Evaluate the temperature curve on a strictly increasing grid in (0, 1).
pub fn temperature_curve(grid: &[f64]) -> Result<Vec<CurvePoint>, DomainError> {
    for pair in grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(DomainError {
                what: "curve grid (not strictly increasing)",
                value: pair[1],
            });
        }
    }
    grid.iter()
        .map(|&t| {
            if !(t > 0.0 && t < 1.0) {
                return Err(DomainError {
                    what: "curve grid point",
                    value: t,
                });
            }
            let st = statistical_temperature(t)?;
            Ok(CurvePoint {
                t,
                t_stat: st.value,
                inv_t_stat: st.inverse_beta_bits,
                flag: st.flag,
            })
        })
        .collect()
}

/// The default plotting grid: `points` equally spaced rationals
/// (i+1)/(points+1). Constructed by integer division so that the midpoint
/// lands exactly on 0.5 when `points` is odd, making the pole row flaggable.
pub fn default_curve_grid(points: usize) -> Vec<f64> {
    let denom = (points + 1) as f64;
    (0..points).map(|i| (i + 1) as f64 / denom).collect()
}
