//! Computable stand-ins for Kolmogorov complexity.
//!
//! True K is uncomputable, so everything here is an upper-bound estimator:
//! a deterministic coder whose output length in bits is a valid description
//! length for the input. Three built-ins ship with the crate:
//!
//! - `block-entropy`: two-part code, weight header plus index within the
//!   weight class; tight against n·h(t) by construction but blind to any
//!   structure beyond the Hamming weight.
//! - `run-length`: gamma-coded run lengths; sees run structure only.
//! - `dictionary`: bit-level long-range matcher with adaptive literal
//!   coding; the only built-in that detects repetition across a
//!   concatenation, which the pair-equilibrium diagnostics require.
//!
//! [`ByteCompressorAdapter`](byte_adapter::ByteCompressorAdapter) wraps any
//! byte-level compressor behind the same contract.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitString;
use crate::entropy::binary_entropy;

mod block_entropy;
mod byte_adapter;
mod dictionary;
mod run_length;
mod struc;

pub use block_entropy::BlockEntropy;
pub use byte_adapter::{ByteCompressor, ByteCompressorAdapter, ByteRle};
pub use dictionary::Dictionary;
pub use run_length::RunLength;
pub use struc::{
    probe_positions, structural_temperature, StrucError, StrucTemperature, DEFAULT_DK_FLOOR,
};

/// An estimated description length, in bits, for one input string.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ComplexityEstimate {
    pub bits: f64,
    pub estimator_id: String,
    pub input_length: usize,
}

/// Deterministic upper-bound description-length estimator.
///
/// Implementations guarantee `0 <= description_bits(s)` and
/// `description_bits(s) <= s.len() + max_overhead_bits(s.len())`: no
/// estimator may beat the literal encoding by pretending, nor exceed it by
/// more than its published header overhead.
pub trait ComplexityEstimator {
    fn id(&self) -> &str;

    /// Estimated description length of `s` in bits.
    fn description_bits(&self, s: &BitString) -> f64;

    /// Published overhead bound c(n): estimates never exceed n + c(n).
    fn max_overhead_bits(&self, n: usize) -> f64;

    fn estimate(&self, s: &BitString) -> ComplexityEstimate {
        ComplexityEstimate {
            bits: self.description_bits(s),
            estimator_id: String::from(self.id()),
            input_length: s.len(),
        }
    }
}

/// The built-in estimators, in stable order.
pub fn builtin_estimators() -> Vec<Box<dyn ComplexityEstimator>> {
    alloc::vec![
        Box::new(BlockEntropy) as Box<dyn ComplexityEstimator>,
        Box::new(RunLength),
        Box::new(Dictionary),
    ]
}

/// Look up a built-in estimator by its id string.
pub fn estimator_by_id(id: &str) -> Option<Box<dyn ComplexityEstimator>> {
    builtin_estimators().into_iter().find(|e| e.id() == id)
}

/// How an estimate compares against the entropy ceiling n·h(t).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntropyBoundReport {
    /// K_est(s) / n.
    pub k_per_n: f64,
    /// h(t) at the string's Hamming fraction.
    pub h_t: f64,
    /// h(t) + header allowance - K_est/n; nonnegative for estimators that
    /// achieve the entropy bound up to their header.
    pub slack: f64,
    pub estimator_id: String,
}

/// Compare an estimate against the per-symbol entropy ceiling.
pub fn entropy_bound_check(s: &BitString, e: &dyn ComplexityEstimator) -> EntropyBoundReport {
    let n = s.len();
    let est = e.estimate(s);
    let k_per_n = est.bits / n as f64;
    let h_t = binary_entropy(s.hamming_fraction()).expect("fraction in [0,1]");
    let allowance = e.max_overhead_bits(n) / n as f64;
    EntropyBoundReport {
        k_per_n,
        h_t,
        slack: h_t + allowance - k_per_n,
        estimator_id: est.estimator_id,
    }
}

/// A flip position outside the string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionOutOfRange {
    pub position: usize,
    pub len: usize,
}

impl fmt::Display for PositionOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "flip position {} out of range for length {}",
            self.position, self.len
        )
    }
}

impl core::error::Error for PositionOutOfRange {}

/// Complexity change per single-bit flip.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DeltaK {
    pub position: usize,
    pub delta_bits: f64,
}

/// Estimate the complexity change of flipping each listed position,
/// independently, from the same base string. Flipping a 0 adds energy
/// (positive change of fraction); flipping a 1 removes it.
pub fn delta_k_profile(
    s: &BitString,
    positions: &[usize],
    e: &dyn ComplexityEstimator,
) -> Result<Vec<DeltaK>, PositionOutOfRange> {
    let base = e.description_bits(s);
    positions
        .iter()
        .map(|&position| {
            if position >= s.len() {
                return Err(PositionOutOfRange {
                    position,
                    len: s.len(),
                });
            }
            let delta_bits = e.description_bits(&s.with_flipped(position)) - base;
            Ok(DeltaK {
                position,
                delta_bits,
            })
        })
        .collect()
}
