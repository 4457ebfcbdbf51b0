//! Exact and log-domain binomial arithmetic, and microstate enumeration.
//!
//! Counts of microstates overflow any fixed-width integer almost immediately,
//! so everything downstream works with log2 C(n, k) ([`log2_binomial`]).
//! Exact u128 values ([`binomial_u128`]) and a formula-free counting walk
//! ([`enumeration_count`]) exist as independent routes for oracles and for
//! tie-safe feasibility verdicts at small n.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::{BitString, BitsError, Macrostate};

/// Default ceiling on explicit microstate enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

const LN_2: f64 = core::f64::consts::LN_2;

/// log2 of the binomial coefficient C(n, k), via log-gamma.
///
/// Accurate to well past 12 significant digits over the supported range.
/// Evaluated at min(k, n-k) so the k <-> n-k symmetry holds bit-exactly.
pub fn log2_binomial(n: usize, k: usize) -> Result<f64, BitsError> {
    if k > n {
        return Err(BitsError::WeightExceedsLength { k, n });
    }
    Ok(log2_binomial_continuous(n, k.min(n - k) as f64))
}

/// Continuous extension of log2 C(n, x) to real x in [0, n].
///
/// Used to locate exact-counting thresholds between integer weights.
pub fn log2_binomial_continuous(n: usize, x: f64) -> f64 {
    debug_assert!((0.0..=n as f64).contains(&x));
    let n = n as f64;
    (libm::lgamma(n + 1.0) - libm::lgamma(x + 1.0) - libm::lgamma(n - x + 1.0)) / LN_2
}

/// Exact C(n, k), or None if the value (or an intermediate) exceeds u128.
pub fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return None;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // Exact at every step: the prefix product is itself a binomial.
        c = c.checked_mul((n - k + i) as u128)? / i as u128;
    }
    Some(c)
}

/// Error from enumeration requests that exceed the configured cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapExceeded {
    /// Number of microstates the request would require, when representable.
    pub required: Option<u128>,
    pub cap: u64,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.required {
            Some(required) => write!(
                f,
                "enumeration of {required} microstates exceeds the cap of {}",
                self.cap
            ),
            None => write!(f, "enumeration count overflows u128 (cap {})", self.cap),
        }
    }
}

impl core::error::Error for CapExceeded {}

/// All strings of the macrostate in lexicographic order, no duplicates.
pub fn enumerate_microstates(m: Macrostate, cap: u64) -> Result<Vec<BitString>, CapExceeded> {
    let required = binomial_u128(m.n(), m.k());
    match required {
        Some(c) if c <= cap as u128 => {}
        _ => return Err(CapExceeded { required, cap }),
    }
    Ok(enumerate_first(m, u64::MAX))
}

/// The first `limit` strings of the macrostate in lexicographic order.
pub fn enumerate_first(m: Macrostate, limit: u64) -> Vec<BitString> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m.n());
    gen_lex(m.n(), m.k(), limit, &mut prefix, &mut out);
    out
}

fn gen_lex(
    n_rem: usize,
    k_rem: usize,
    limit: u64,
    prefix: &mut Vec<bool>,
    out: &mut Vec<BitString>,
) {
    if out.len() as u64 >= limit {
        return;
    }
    if n_rem == 0 {
        out.push(BitString::from_bits(prefix.iter().copied()));
        return;
    }
    if k_rem < n_rem {
        prefix.push(false);
        gen_lex(n_rem - 1, k_rem, limit, prefix, out);
        prefix.pop();
    }
    if k_rem > 0 {
        prefix.push(true);
        gen_lex(n_rem - 1, k_rem - 1, limit, prefix, out);
        prefix.pop();
    }
}

/// Count the weight-k strings of length n by walking the enumeration tree,
/// with no binomial formula involved. Returns None once the count passes
/// `cap`. Independent route against [`binomial_u128`] / [`log2_binomial`].
pub fn enumeration_count(n: usize, k: usize, cap: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let mut count = 0u64;
    if walk_count(n, k, cap, &mut count) {
        Some(count)
    } else {
        None
    }
}

fn walk_count(n_rem: usize, k_rem: usize, cap: u64, count: &mut u64) -> bool {
    // Subtrees that are a single path collapse to one leaf.
    if k_rem == 0 || k_rem == n_rem {
        *count += 1;
        return *count <= cap;
    }
    walk_count(n_rem - 1, k_rem, cap, count) && walk_count(n_rem - 1, k_rem - 1, cap, count)
}
