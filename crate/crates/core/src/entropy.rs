//! Binary entropy and its derivative.

use core::fmt;

use crate::bits::Macrostate;

/// Argument outside the mathematical domain of an operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainError {
    pub what: &'static str,
    pub value: f64,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} out of domain: {}", self.what, self.value)
    }
}

impl core::error::Error for DomainError {}

/// h(t) = -t log2 t - (1-t) log2 (1-t), with 0 log2 0 = 0.
///
/// Bits of uncertainty per symbol of an independent-bit source at fraction t;
/// n·h(t) is the log-scale microstate count of the macrostate (n, t·n).
pub fn binary_entropy(t: f64) -> Result<f64, DomainError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(DomainError {
            what: "binary_entropy fraction",
            value: t,
        });
    }
    if t == 0.0 || t == 1.0 {
        return Ok(0.0);
    }
    Ok(-t * libm::log2(t) - (1.0 - t) * libm::log2(1.0 - t))
}

/// h'(t) = log2((1-t)/t), defined on the open interval (0, 1).
pub fn entropy_derivative(t: f64) -> Result<f64, DomainError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(DomainError {
            what: "entropy_derivative fraction",
            value: t,
        });
    }
    Ok(libm::log2((1.0 - t) / t))
}

/// Entropy bookkeeping for one macrostate.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntropyReport {
    /// h(t) in [0, 1].
    pub h_bits_per_symbol: f64,
    /// n · h(t).
    pub total_entropy_bits: f64,
    /// h'(t); None at t in {0, 1} where the derivative diverges.
    pub dh_dt_bits: Option<f64>,
}

impl EntropyReport {
    pub fn for_macrostate(m: Macrostate) -> EntropyReport {
        let t = m.hamming_fraction();
        let h = binary_entropy(t).expect("macrostate fraction is in [0,1]");
        EntropyReport {
            h_bits_per_symbol: h,
            total_entropy_bits: m.n() as f64 * h,
            dh_dt_bits: entropy_derivative(t).ok(),
        }
    }
}
