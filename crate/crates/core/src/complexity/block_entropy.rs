//! Two-part weight-class code.

use crate::binom::log2_binomial;
use crate::bits::BitString;

use super::ComplexityEstimator;

/// Codes the Hamming weight in log2(n+1) bits, then the index of the string
/// within its weight class in log2 C(n, k) bits. Meets the entropy ceiling
/// n·h(t) to within the weight header for every string, and is completely
/// blind to structure beyond the weight.
pub struct BlockEntropy;

impl ComplexityEstimator for BlockEntropy {
    fn id(&self) -> &str {
        "block-entropy"
    }

    fn description_bits(&self, s: &BitString) -> f64 {
        let n = s.len();
        libm::log2(n as f64 + 1.0) + log2_binomial(n, s.weight()).expect("weight <= length")
    }

    fn max_overhead_bits(&self, n: usize) -> f64 {
        // log2 C(n,k) <= n, so the weight header is the whole overhead.
        libm::log2(n as f64 + 1.0)
    }
}
