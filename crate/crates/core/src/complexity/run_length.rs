//! Gamma-coded run lengths.

use crate::bits::BitString;

use super::ComplexityEstimator;

/// Elias gamma code length for x >= 1: 2 floor(log2 x) + 1 bits.
pub(crate) fn gamma_len(x: u64) -> u64 {
    debug_assert!(x >= 1);
    2 * (63 - x.leading_zeros() as u64) + 1
}

/// Elias delta code length for x >= 1.
pub(crate) fn delta_len(x: u64) -> u64 {
    debug_assert!(x >= 1);
    let l = 63 - x.leading_zeros() as u64;
    l + gamma_len(l + 1)
}

/// One bit for the leading symbol, then the maximal runs gamma-coded in
/// order. A one-bit mode flag selects the literal fallback whenever the run
/// code would exceed it, so the estimate never tops n + 1 bits.
pub struct RunLength;

impl ComplexityEstimator for RunLength {
    fn id(&self) -> &str {
        "run-length"
    }

    fn description_bits(&self, s: &BitString) -> f64 {
        let mut raw = 1u64; // leading symbol
        let mut run = 1u64;
        let mut prev = s.get(0);
        for b in s.iter_bits().skip(1) {
            if b == prev {
                run += 1;
            } else {
                raw += gamma_len(run);
                run = 1;
                prev = b;
            }
        }
        raw += gamma_len(run);
        1.0 + (raw.min(s.len() as u64)) as f64
    }

    fn max_overhead_bits(&self, _n: usize) -> f64 {
        1.0
    }
}
