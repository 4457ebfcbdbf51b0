//! Thermal equilibrium for strings and pairs, and the zeroth law.
//!
//! A string is a heat bath when its statistical and structural temperatures
//! coincide — equivalently, when its description length matches n·h(t), all
//! its energy being heat with no structure beyond the Hamming fraction. For
//! pairs the relation compares the description length of the concatenation
//! against 2n·h of the averaged fraction; identical copies fall far short of
//! that target (the concatenation collapses to one copy plus a
//! back-reference), which makes the relation irreflexive and lets
//! transitivity fail on triples that carry duplicated content.
//!
//! Transitivity is judged over chains of pairwise-distinct slots; the
//! canonical violation enters through a triple whose first and last slots
//! hold the same string, exactly the duplicated-bath scenario. For
//! independently drawn baths the law holds except with probability falling
//! in the bath size, which [`transitivity_failure_sweep`] estimates.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitString;
use crate::complexity::{
    structural_temperature, ComplexityEstimate, ComplexityEstimator, StrucError, StrucTemperature,
};
use crate::entropy::binary_entropy;
use crate::rng::Seed;
use crate::temperature::{statistical_temperature, StatTemperature, TempFlag};

/// Tolerances and budgets for equilibrium detection. The shipped defaults
/// are calibrated against seeded ensembles; the evidence lives in the
/// repository's calibration file.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EquilibriumConfig {
    /// Relative tolerance for the inverse-temperature match in
    /// [`is_heat_bath`].
    pub rel_tol: f64,
    /// Bits/symbol tolerance for the direct |K/n - h(t)| check.
    pub direct_tol: f64,
    /// Bits/symbol tolerance for the pair relation.
    pub pair_tol: f64,
    /// Minimum length for single-string verdicts (estimator headers must be
    /// negligible).
    pub min_len: usize,
    /// Flip probes for the structural temperature.
    pub probe_budget: usize,
    /// Estimator resolution floor for structural-temperature clamping.
    pub dk_floor: f64,
}

impl Default for EquilibriumConfig {
    fn default() -> Self {
        EquilibriumConfig {
            rel_tol: 0.25,
            direct_tol: 0.05,
            pair_tol: 0.0026,
            min_len: 1 << 12,
            probe_budget: 4096,
            dk_floor: 1.0,
        }
    }
}

/// Errors from equilibrium operations.
#[derive(Debug, Clone, PartialEq)]
pub enum EquilibriumError {
    /// Below the configured minimum length for a trustworthy verdict.
    TooShort {
        n: usize,
        min: usize,
    },
    LengthMismatch {
        a: usize,
        b: usize,
    },
    Struc(StrucError),
}

impl fmt::Display for EquilibriumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquilibriumError::TooShort { n, min } => {
                write!(f, "string of length {n} below verdict minimum {min}")
            }
            EquilibriumError::LengthMismatch { a, b } => {
                write!(f, "pair lengths differ: {a} vs {b}")
            }
            EquilibriumError::Struc(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EquilibriumError {}

impl From<StrucError> for EquilibriumError {
    fn from(e: StrucError) -> Self {
        EquilibriumError::Struc(e)
    }
}

/// Secondary criterion: K_est against n·h(t) directly.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DirectEntropyCheck {
    pub k_est_per_n: f64,
    pub h_t: f64,
    /// (K_est - n·h)/n, signed.
    pub deviation_per_n: f64,
    pub within: bool,
    pub tol: f64,
}

/// Heat-bath verdict for one string.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EquilibriumVerdict {
    pub t_stat: StatTemperature,
    pub t_struc: StrucTemperature,
    /// |1/T_struc - 1/T_stat| relative to the larger inverse (floored at 1
    /// bit), on the per-flip scale shared by both temperatures.
    pub relative_gap: f64,
    pub is_heat_bath: bool,
    pub tolerance: f64,
    /// Boundary/divergent disclaimers inherited from either temperature.
    pub flag: TempFlag,
    pub direct: DirectEntropyCheck,
    pub estimator_id: String,
}

/// Decide whether `s` is a heat bath: statistical temperature equals
/// structural temperature within tolerance (primary), with the direct
/// K_est vs n·h(t) comparison reported alongside.
pub fn is_heat_bath(
    s: &BitString,
    e: &dyn ComplexityEstimator,
    seed: Seed,
    cfg: &EquilibriumConfig,
) -> Result<EquilibriumVerdict, EquilibriumError> {
    let n = s.len();
    if n < cfg.min_len {
        return Err(EquilibriumError::TooShort {
            n,
            min: cfg.min_len,
        });
    }
    let t = s.hamming_fraction();
    let t_stat = statistical_temperature(t).expect("fraction in [0,1]");
    let t_struc = structural_temperature(s, e, cfg.probe_budget, seed, cfg.dk_floor)?;

    let inv_stat = t_stat.inverse_beta_bits;
    let inv_struc = t_struc.max_delta_k_bits;
    let relative_gap = if inv_stat.is_finite() {
        (inv_struc - inv_stat).abs() / inv_stat.abs().max(inv_struc.abs()).max(1.0)
    } else {
        f64::INFINITY // boundary fractions: no meaningful comparison
    };

    let flag = if t_stat.flag != TempFlag::Ok {
        t_stat.flag
    } else {
        t_struc.flag
    };
    let est = e.estimate(s);
    let h_t = binary_entropy(t).expect("fraction in [0,1]");
    let deviation_per_n = est.bits / n as f64 - h_t;
    let direct = DirectEntropyCheck {
        k_est_per_n: est.bits / n as f64,
        h_t,
        deviation_per_n,
        within: deviation_per_n.abs() <= cfg.direct_tol,
        tol: cfg.direct_tol,
    };

    Ok(EquilibriumVerdict {
        is_heat_bath: flag == TempFlag::Ok && relative_gap <= cfg.rel_tol,
        t_stat,
        t_struc,
        relative_gap,
        tolerance: cfg.rel_tol,
        flag,
        direct,
        estimator_id: est.estimator_id,
    })
}

/// Pairwise thermal-equilibrium measurement.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PairRelationResult {
    pub k_concat: ComplexityEstimate,
    /// 2n · h((t + t')/2).
    pub target_bits: f64,
    /// k_concat - target, signed.
    pub slack_bits: f64,
    pub in_equilibrium: bool,
    pub tolerance_bits_per_symbol: f64,
}

/// Evaluate the pair relation: concatenate, estimate, compare against
/// 2n·h((t+t')/2) within tol bits/symbol.
///
/// Detecting the shortfall of an identical copy requires an estimator with
/// cross-string memory (the dictionary coder); weight-class coders are
/// blind to it.
pub fn pair_equilibrium(
    s: &BitString,
    s2: &BitString,
    e: &dyn ComplexityEstimator,
    tol_bits_per_symbol: f64,
) -> Result<PairRelationResult, EquilibriumError> {
    if s.len() != s2.len() {
        return Err(EquilibriumError::LengthMismatch {
            a: s.len(),
            b: s2.len(),
        });
    }
    let n = s.len();
    let k_concat = e.estimate(&s.concat(s2));
    let mid = (s.weight() + s2.weight()) as f64 / (2 * n) as f64;
    let target_bits = (2 * n) as f64 * binary_entropy(mid).expect("fraction in [0,1]");
    let slack_bits = k_concat.bits - target_bits;
    Ok(PairRelationResult {
        in_equilibrium: slack_bits.abs() <= tol_bits_per_symbol * (2 * n) as f64,
        k_concat,
        target_bits,
        slack_bits,
        tolerance_bits_per_symbol: tol_bits_per_symbol,
    })
}

/// Zeroth-law evaluation of one triple.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ZerothLawReport {
    /// in_equilibrium for every ordered pair of slots, reflexive included.
    pub pair_matrix: [[bool; 3]; 3],
    /// Diagonal of the matrix: slot vs its own copy.
    pub reflexivity: [bool; 3],
    /// No violated chain x ~ y, y ~ z but x !~ z over pairwise-distinct
    /// slots.
    pub transitive: bool,
    /// Violated chains (x, y, z).
    pub violations: Vec<(usize, usize, usize)>,
    /// Some violated chain has identical content in its endpoint slots —
    /// the duplicated-bath pattern that makes irreflexivity bite.
    pub duplicate_content_violation: bool,
}

/// Evaluate all ordered pairs of the triple and check transitivity.
pub fn zeroth_law_experiment(
    triple: &[BitString; 3],
    e: &dyn ComplexityEstimator,
    tol_bits_per_symbol: f64,
) -> Result<ZerothLawReport, EquilibriumError> {
    let mut pair_matrix = [[false; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            pair_matrix[i][j] =
                pair_equilibrium(&triple[i], &triple[j], e, tol_bits_per_symbol)?.in_equilibrium;
        }
    }
    let mut violations = Vec::new();
    let mut duplicate_content_violation = false;
    for x in 0..3 {
        for y in 0..3 {
            for z in 0..3 {
                if x == y || y == z || x == z {
                    continue;
                }
                if pair_matrix[x][y] && pair_matrix[y][z] && !pair_matrix[x][z] {
                    if triple[x] == triple[z] {
                        duplicate_content_violation = true;
                    }
                    violations.push((x, y, z));
                }
            }
        }
    }
    Ok(ZerothLawReport {
        pair_matrix,
        reflexivity: [pair_matrix[0][0], pair_matrix[1][1], pair_matrix[2][2]],
        transitive: violations.is_empty(),
        violations,
        duplicate_content_violation,
    })
}

/// Composition of sweep trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum TripleKind {
    /// Three independently generated baths at the same fraction.
    Independent,
    /// First bath duplicated into the third slot: the forced violation.
    DuplicateThird,
}

/// One row of the failure-rate table.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepRow {
    pub n: usize,
    pub trials: u32,
    pub failures: u32,
    pub rate: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Monte-Carlo estimate of the transitivity-failure probability per length.
///
/// Each trial generates a triple at fraction `t` with per-trial derived
/// seeds, evaluates the zeroth law, and counts non-transitive outcomes.
/// Intervals are 95% Wilson.
pub fn transitivity_failure_sweep(
    t: f64,
    n_grid: &[usize],
    trials: u32,
    kind: TripleKind,
    e: &dyn ComplexityEstimator,
    tol_bits_per_symbol: f64,
    seed: Seed,
) -> Result<Vec<SweepRow>, EquilibriumError> {
    let mut rows = Vec::with_capacity(n_grid.len());
    for (ni, &n) in n_grid.iter().enumerate() {
        let mut failures = 0u32;
        for trial in 0..trials {
            let trial_seed = seed.derive(((ni as u64) << 32) | trial as u64);
            let gen = |slot: u64| {
                crate::bits::generate_bernoulli(n, t, trial_seed.derive(slot))
                    .expect("t validated by caller")
            };
            let a = gen(0);
            let b = gen(1);
            let c = match kind {
                TripleKind::Independent => gen(2),
                TripleKind::DuplicateThird => a.clone(),
            };
            let report = zeroth_law_experiment(&[a, b, c], e, tol_bits_per_symbol)?;
            if !report.transitive {
                failures += 1;
            }
        }
        let rate = failures as f64 / trials as f64;
        let (ci_low, ci_high) = wilson_interval(failures, trials);
        rows.push(SweepRow {
            n,
            trials,
            failures,
            rate,
            ci_low,
            ci_high,
        });
    }
    Ok(rows)
}

/// 95% Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u32, trials: u32) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054f64;
    let m = trials as f64;
    let p = successes as f64 / m;
    let z2 = z * z;
    let denom = 1.0 + z2 / m;
    let center = p + z2 / (2.0 * m);
    let half = z * libm::sqrt(p * (1.0 - p) / m + z2 / (4.0 * m * m));
    // clamp so the interval always contains the point estimate
    (
        ((center - half) / denom).clamp(0.0, p),
        ((center + half) / denom).clamp(p, 1.0),
    )
}

/// Exponentially decaying envelope a · exp(-rate · n) fitted over the Wilson
/// upper bounds of a sweep, then lifted to dominate all of them. The decay
/// rate is clamped nonnegative; no decay constant is asserted as ground
/// truth.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ExpEnvelope {
    pub amplitude: f64,
    pub decay_per_symbol: f64,
}

impl ExpEnvelope {
    pub fn eval(&self, n: usize) -> f64 {
        self.amplitude * libm::exp(-self.decay_per_symbol * n as f64)
    }
}

/// Fit the envelope to a sweep (log-linear least squares on the Wilson
/// upper bounds). Returns None for sweeps with fewer than two rows.
pub fn fit_exponential_envelope(rows: &[SweepRow]) -> Option<ExpEnvelope> {
    if rows.len() < 2 {
        return None;
    }
    let m = rows.len() as f64;
    let xs = rows.iter().map(|r| r.n as f64);
    let ys = rows.iter().map(|r| libm::log(r.ci_high.max(1e-12)));
    let mean_x: f64 = xs.clone().sum::<f64>() / m;
    let mean_y: f64 = ys.clone().sum::<f64>() / m;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, y) in xs.clone().zip(ys.clone()) {
        cov += (x - mean_x) * (y - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    let slope = (cov / var).min(0.0);
    let mut intercept = mean_y - slope * mean_x;
    let max_resid = xs
        .zip(ys)
        .map(|(x, y)| y - (intercept + slope * x))
        .fold(f64::NEG_INFINITY, f64::max);
    intercept += max_resid.max(0.0);
    Some(ExpEnvelope {
        amplitude: libm::exp(intercept),
        decay_per_symbol: -slope,
    })
}
