//! Macrostate feasibility by counting, and the Carnot engine.
//!
//! A transformation between macrostates is realizable by some logically
//! reversible, weight-conserving map exactly when the after-side has at
//! least as many microstate tuples as the before-side (an injection cannot
//! go from a larger set to a smaller one). [`macro_feasible`] decides this
//! on the log2 scale, [`brute_force_feasible`] re-decides it by counting the
//! enumeration tree with no binomial formula, and
//! [`build_injection_table`] materializes an explicit injection by pairing
//! lexicographically ranked tuples — the constructive witness.
//!
//! [`carnot_run`] moves `d1` units of energy out of a hot string and
//! searches for the least `d2` that must be deposited into the cold string
//! to keep the count inequality intact; the fraction not deposited is
//! extracted work, and its ratio to `d1` is the engine efficiency.

use alloc::vec::Vec;
use core::fmt;

use crate::binom::{
    binomial_u128, enumerate_first, enumeration_count, log2_binomial, log2_binomial_continuous,
    CapExceeded,
};
use crate::bits::{BitsError, Macrostate};
use crate::entropy::entropy_derivative;
use crate::temperature::CountMode;
use crate::transform::{TableEntry, TableError, TransformationTable};

/// A proposed transition between macrostates of equal length, moving whole
/// 1s, with the weight deficit booked as extracted work.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MacroTransition {
    n: usize,
    before: Vec<usize>,
    after: Vec<usize>,
    extracted: usize,
}

/// Transition construction errors.
#[derive(Debug, Clone, PartialEq)]
pub enum TransitionError {
    Bits(BitsError),
    /// After-side weight exceeds before-side: extraction would be negative.
    NegativeExtraction {
        before_weight: usize,
        after_weight: usize,
    },
}

impl fmt::Display for TransitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransitionError::Bits(e) => write!(f, "{e}"),
            TransitionError::NegativeExtraction {
                before_weight,
                after_weight,
            } => write!(
                f,
                "after-side weight {after_weight} exceeds before-side {before_weight}"
            ),
        }
    }
}

impl core::error::Error for TransitionError {}

impl From<BitsError> for TransitionError {
    fn from(e: BitsError) -> Self {
        TransitionError::Bits(e)
    }
}

impl MacroTransition {
    fn build(n: usize, before: Vec<usize>, after: Vec<usize>) -> Result<Self, TransitionError> {
        for &k in before.iter().chain(&after) {
            Macrostate::new(n, k)?;
        }
        let before_weight: usize = before.iter().sum();
        let after_weight: usize = after.iter().sum();
        if after_weight > before_weight {
            return Err(TransitionError::NegativeExtraction {
                before_weight,
                after_weight,
            });
        }
        Ok(MacroTransition {
            n,
            before,
            after,
            extracted: before_weight - after_weight,
        })
    }

    /// Two-string transition (k1, k2) -> (k1', k2').
    pub fn pair(
        n: usize,
        before: (usize, usize),
        after: (usize, usize),
    ) -> Result<Self, TransitionError> {
        Self::build(
            n,
            alloc::vec![before.0, before.1],
            alloc::vec![after.0, after.1],
        )
    }

    /// Single-string transition k -> k'.
    pub fn single(n: usize, before: usize, after: usize) -> Result<Self, TransitionError> {
        Self::build(n, alloc::vec![before], alloc::vec![after])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn before(&self) -> &[usize] {
        &self.before
    }

    pub fn after(&self) -> &[usize] {
        &self.after
    }

    /// 1s leaving the system: before-weight minus after-weight.
    pub fn extracted(&self) -> usize {
        self.extracted
    }
}

/// Counting ledger for one feasibility decision.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// log2 of the before-side tuple count (exact or asymptotic per mode).
    pub before_bits: f64,
    /// log2 of the after-side tuple count.
    pub after_bits: f64,
    /// after - before; nonnegative exactly when feasible (up to the mode's
    /// arithmetic).
    pub slack_bits: f64,
    pub mode: CountMode,
}

fn side_bits(n: usize, weights: &[usize], mode: CountMode) -> f64 {
    weights
        .iter()
        .map(|&k| {
            let m = Macrostate::new(n, k).expect("validated at construction");
            crate::temperature::microstate_count_bits(m, mode)
        })
        .sum()
}

/// Exact u128 product of the side's counts, when every factor and the
/// product fit.
fn side_count_u128(n: usize, weights: &[usize]) -> Option<u128> {
    weights
        .iter()
        .try_fold(1u128, |acc, &k| acc.checked_mul(binomial_u128(n, k)?))
}

/// Decide whether an injective, weight-conserving map can realize the
/// transition, by comparing microstate counts of the two sides.
///
/// Exact mode uses integer arithmetic whenever the products fit in u128
/// (ties then decide correctly), falling back to log2 sums; asymptotic mode
/// compares n·h(k/n) sums. The ledger always reports log2 values.
pub fn macro_feasible(mt: &MacroTransition, mode: CountMode) -> FeasibilityReport {
    let before_bits = side_bits(mt.n, &mt.before, mode);
    let after_bits = side_bits(mt.n, &mt.after, mode);
    let feasible = match mode {
        CountMode::Exact => {
            match (
                side_count_u128(mt.n, &mt.before),
                side_count_u128(mt.n, &mt.after),
            ) {
                (Some(before), Some(after)) => after >= before,
                _ => after_bits >= before_bits,
            }
        }
        CountMode::Asymptotic => after_bits >= before_bits,
    };
    FeasibilityReport {
        feasible,
        before_bits,
        after_bits,
        slack_bits: after_bits - before_bits,
        mode,
    }
}

/// Decide feasibility by explicitly counting the enumeration tree of every
/// weight class — no binomial formula on any path. Independent oracle for
/// [`macro_feasible`] in exact mode.
pub fn brute_force_feasible(mt: &MacroTransition, cap: u64) -> Result<bool, CapExceeded> {
    let count_side = |weights: &[usize]| -> Result<u128, CapExceeded> {
        weights.iter().try_fold(1u128, |acc, &k| {
            let c = enumeration_count(mt.n, k, cap).ok_or(CapExceeded {
                required: binomial_u128(mt.n, k),
                cap,
            })?;
            Ok(acc * c as u128)
        })
    };
    Ok(count_side(&mt.after)? >= count_side(&mt.before)?)
}

/// Injection construction failures.
#[derive(Debug, Clone, PartialEq)]
pub enum InjectionError {
    /// The after-side is smaller: no injection exists.
    Infeasible,
    Cap(CapExceeded),
    Table(TableError),
}

impl fmt::Display for InjectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InjectionError::Infeasible => write!(f, "after-side count is smaller; no injection"),
            InjectionError::Cap(e) => write!(f, "{e}"),
            InjectionError::Table(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for InjectionError {}

/// Materialize the injection witnessing feasibility: the i-th before-tuple
/// in lexicographic rank order maps to the i-th after-tuple, each entry
/// booking the transition's extracted 1s. The result passes both law checks
/// by construction.
pub fn build_injection_table(
    mt: &MacroTransition,
    cap: u64,
) -> Result<TransformationTable, InjectionError> {
    if !brute_force_feasible(mt, cap).map_err(InjectionError::Cap)? {
        return Err(InjectionError::Infeasible);
    }
    let before_count = side_count_u128(mt.n, &mt.before)
        .filter(|&c| c <= cap as u128)
        .ok_or(InjectionError::Cap(CapExceeded {
            required: side_count_u128(mt.n, &mt.before),
            cap,
        }))? as u64;

    let tuples = |weights: &[usize], limit: u64| -> Vec<Vec<crate::bits::BitString>> {
        // lexicographic rank order over the tuple product
        let mut out = Vec::new();
        let sides: Vec<_> = weights
            .iter()
            .map(|&k| enumerate_first(Macrostate::new(mt.n, k).expect("validated"), limit))
            .collect();
        let mut index = alloc::vec![0usize; weights.len()];
        'outer: while (out.len() as u64) < limit {
            out.push(
                index
                    .iter()
                    .zip(&sides)
                    .map(|(&i, side)| side[i].clone())
                    .collect(),
            );
            for slot in (0..index.len()).rev() {
                index[slot] += 1;
                if index[slot] < sides[slot].len() {
                    continue 'outer;
                }
                index[slot] = 0;
            }
            break;
        }
        out
    };

    let before = tuples(&mt.before, before_count);
    let after = tuples(&mt.after, before_count);
    let entries = before
        .into_iter()
        .zip(after)
        .map(|(inputs, outputs)| TableEntry {
            inputs,
            outputs,
            extracted: mt.extracted as u64,
        })
        .collect();
    TransformationTable::new(entries).map_err(InjectionError::Table)
}

/// Which side of the theorem's stated regime the parameters fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CarnotRegime {
    /// 0 < t2 < t1 < 1/2: the efficiency theorem applies.
    PositiveBranch,
    /// Anything else: the counting search still runs, but the efficiency
    /// formula is not asserted.
    OutsideTheoremRegime,
}

/// Outcome of one Carnot run.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CarnotOutcome {
    pub n: usize,
    pub t1: f64,
    pub t2: f64,
    pub k1: usize,
    pub k2: usize,
    pub d1: usize,
    pub mode: CountMode,
    pub regime: CarnotRegime,
    pub feasible: bool,
    /// Least 1s deposit into the cold string that keeps the map injective;
    /// None when no d2 <= d1 works.
    pub d2_min: Option<usize>,
    /// d1 - d2_min.
    pub extracted: Option<usize>,
    /// (d1 - d2_min) / d1.
    pub eta_exact: Option<f64>,
    /// 1 - T2/T1 = 1 - h'(t1)/h'(t2); None when t2 sits on the pole.
    pub eta_asymptotic: Option<f64>,
    /// eta_exact - eta_asymptotic.
    pub gap: Option<f64>,
    /// Efficiency at the real-valued crossing of the counting inequality
    /// (continuous in the deposit), isolating the linearization error from
    /// whole-1 quantization.
    pub eta_threshold: Option<f64>,
    /// eta_threshold - eta_asymptotic.
    pub gap_threshold: Option<f64>,
}

/// Carnot parameter validation errors.
#[derive(Debug, Clone, PartialEq)]
pub enum CarnotError {
    FractionOutOfRange {
        name: &'static str,
        value: f64,
    },
    /// d1 must satisfy 1 <= d1 <= k1.
    BadTransfer {
        d1: usize,
        k1: usize,
    },
    BadLength,
}

impl fmt::Display for CarnotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CarnotError::FractionOutOfRange { name, value } => {
                write!(f, "{name} = {value} outside (0, 1)")
            }
            CarnotError::BadTransfer { d1, k1 } => {
                write!(f, "d1 = {d1} not in 1..=k1 (k1 = {k1})")
            }
            CarnotError::BadLength => write!(f, "n must be at least 2"),
        }
    }
}

impl core::error::Error for CarnotError {}

/// Run the engine: remove `d1` 1s from the hot string at fraction `t1`,
/// search d2 in 0..=d1 for the least feasible deposit into the cold string
/// at `t2`, and report exact and asymptotic efficiencies.
pub fn carnot_run(
    n: usize,
    t1: f64,
    t2: f64,
    d1: usize,
    mode: CountMode,
) -> Result<CarnotOutcome, CarnotError> {
    if n < 2 {
        return Err(CarnotError::BadLength);
    }
    for (name, value) in [("t1", t1), ("t2", t2)] {
        if !(value > 0.0 && value < 1.0) {
            return Err(CarnotError::FractionOutOfRange { name, value });
        }
    }
    let k1 = libm::round(t1 * n as f64) as usize;
    let k2 = libm::round(t2 * n as f64) as usize;
    if d1 == 0 || d1 > k1 {
        return Err(CarnotError::BadTransfer { d1, k1 });
    }
    let regime = if t2 < t1 && t1 < 0.5 {
        CarnotRegime::PositiveBranch
    } else {
        CarnotRegime::OutsideTheoremRegime
    };

    // Smallest feasible deposit. Feasibility is not monotone once k2 + d2
    // crosses n/2, so scan rather than bisect.
    let mut d2_min = None;
    for d2 in 0..=d1 {
        if k2 + d2 > n {
            break;
        }
        let mt = MacroTransition::pair(n, (k1, k2), (k1 - d1, k2 + d2))
            .expect("weights validated above");
        if macro_feasible(&mt, mode).feasible {
            d2_min = Some(d2);
            break;
        }
    }

    let eta_asymptotic = {
        let h1 = entropy_derivative(t1).expect("t1 in (0,1)");
        let h2 = entropy_derivative(t2).expect("t2 in (0,1)");
        (h2 != 0.0).then(|| 1.0 - h1 / h2)
    };

    // Continuous crossing: least real x in [0, d1] with
    // after(x) >= before, where the cold weight is interpolated.
    let eta_threshold = deposit_threshold(n, k1, k2, d1, mode).map(|x| (d1 as f64 - x) / d1 as f64);

    let eta_exact = d2_min.map(|d2| (d1 - d2) as f64 / d1 as f64);
    Ok(CarnotOutcome {
        n,
        t1,
        t2,
        k1,
        k2,
        d1,
        mode,
        regime,
        feasible: d2_min.is_some(),
        d2_min,
        extracted: d2_min.map(|d2| d1 - d2),
        eta_exact,
        eta_asymptotic,
        gap: match (eta_exact, eta_asymptotic) {
            (Some(e), Some(a)) => Some(e - a),
            _ => None,
        },
        gap_threshold: match (eta_threshold, eta_asymptotic) {
            (Some(e), Some(a)) => Some(e - a),
            _ => None,
        },
        eta_threshold,
    })
}

/// Real-valued deposit at which the counting inequality starts to hold,
/// by bisection on the continuous extension of the side counts.
fn deposit_threshold(n: usize, k1: usize, k2: usize, d1: usize, mode: CountMode) -> Option<f64> {
    let cold_bits = |x: f64| -> f64 {
        match mode {
            CountMode::Exact => log2_binomial_continuous(n, k2 as f64 + x),
            CountMode::Asymptotic => {
                let t = (k2 as f64 + x) / n as f64;
                n as f64 * crate::entropy::binary_entropy(t).expect("t in [0,1]")
            }
        }
    };
    let hot_drop = match mode {
        CountMode::Exact => {
            log2_binomial(n, k1).expect("valid") - log2_binomial(n, k1 - d1).expect("valid")
        }
        CountMode::Asymptotic => {
            let h = |k: usize| {
                n as f64 * crate::entropy::binary_entropy(k as f64 / n as f64).expect("t in [0,1]")
            };
            h(k1) - h(k1 - d1)
        }
    };
    let gain = |x: f64| cold_bits(x) - cold_bits(0.0) - hot_drop;
    let hi_limit = (d1 as f64).min((n - k2) as f64);
    if gain(hi_limit) < 0.0 {
        return None;
    }
    if gain(0.0) >= 0.0 {
        return Some(0.0);
    }
    let (mut lo, mut hi) = (0.0, hi_limit);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if gain(mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{check_first_law, check_second_law};

    #[test]
    fn clausius_accentuation_is_infeasible() {
        // hot gets hotter, cold colder, weight preserved: impossible
        let mt = MacroTransition::pair(100, (40, 20), (45, 15)).unwrap();
        assert_eq!(mt.extracted(), 0);
        assert!(!macro_feasible(&mt, CountMode::Exact).feasible);
        assert!(!macro_feasible(&mt, CountMode::Asymptotic).feasible);
    }

    #[test]
    fn kelvin_single_bath_extraction_is_infeasible() {
        let mt = MacroTransition::single(1000, 300, 250).unwrap();
        assert_eq!(mt.extracted(), 50);
        let report = macro_feasible(&mt, CountMode::Exact);
        assert!(!report.feasible);
        assert!(report.slack_bits < 0.0);
    }

    #[test]
    fn identity_is_feasible_with_equality() {
        let mt = MacroTransition::pair(60, (20, 10), (20, 10)).unwrap();
        let report = macro_feasible(&mt, CountMode::Exact);
        assert!(report.feasible);
        assert_eq!(report.slack_bits, 0.0);
    }

    #[test]
    fn negative_extraction_rejected() {
        assert!(matches!(
            MacroTransition::pair(10, (2, 2), (3, 2)),
            Err(TransitionError::NegativeExtraction { .. })
        ));
        assert!(MacroTransition::pair(10, (2, 11), (2, 2)).is_err());
    }

    #[test]
    fn brute_force_counting_examples() {
        // C(6,2)^2 = 225 >= C(6,3) C(6,1) = 120
        let mt = MacroTransition::pair(6, (3, 1), (2, 2)).unwrap();
        assert!(brute_force_feasible(&mt, 10_000).unwrap());
        let reversed = MacroTransition::pair(6, (2, 2), (3, 1)).unwrap();
        assert!(!brute_force_feasible(&reversed, 10_000).unwrap());
        let identity = MacroTransition::pair(6, (2, 2), (2, 2)).unwrap();
        assert!(brute_force_feasible(&identity, 10_000).unwrap());
    }

    #[test]
    fn injection_table_passes_both_laws() {
        let mt = MacroTransition::pair(6, (3, 1), (2, 2)).unwrap();
        let table = build_injection_table(&mt, 100_000).unwrap();
        assert_eq!(table.len(), 120);
        assert!(check_first_law(&table).holds);
        assert!(check_second_law(&table).holds);

        // with extraction: the hot string sits above the mode, so removing a
        // 1 grows its count and the deposit is free: (5,1) -> (4,1), one out
        let mt = MacroTransition::pair(6, (5, 1), (4, 1)).unwrap();
        assert_eq!(mt.extracted(), 1);
        let table = build_injection_table(&mt, 100_000).unwrap();
        assert_eq!(table.len(), 36);
        assert!(check_first_law(&table).holds);
        assert!(check_second_law(&table).holds);
        let materialized = table.materialize_extraction(2).unwrap();
        assert!(check_first_law(&materialized).holds);
        assert!(check_second_law(&materialized).holds);
    }

    #[test]
    fn injection_infeasible_and_cap_errors() {
        let mt = MacroTransition::pair(6, (2, 2), (3, 1)).unwrap();
        assert!(matches!(
            build_injection_table(&mt, 10_000),
            Err(InjectionError::Infeasible)
        ));
        let mt = MacroTransition::pair(30, (15, 15), (15, 15)).unwrap();
        assert!(matches!(
            build_injection_table(&mt, 1000),
            Err(InjectionError::Cap(_))
        ));
    }

    #[test]
    fn carnot_asymptotic_efficiency_closed_form() {
        let out = carnot_run(10_000, 0.4, 0.2, 10, CountMode::Exact).unwrap();
        assert_eq!(out.regime, CarnotRegime::PositiveBranch);
        let eta = out.eta_asymptotic.unwrap();
        assert!((eta - (1.0 - libm::log2(1.5) / 2.0)).abs() < 1e-12);
        assert!((eta - 0.70752).abs() < 1e-5);
    }

    #[test]
    fn equal_temperatures_have_no_free_energy() {
        // eta_asymptotic is exactly 0; at finite n even d2 = d1 loses count
        // (strict log-concavity), so the integer search reports infeasible.
        let out = carnot_run(1000, 0.3, 0.3, 10, CountMode::Exact).unwrap();
        assert_eq!(out.eta_asymptotic, Some(0.0));
        assert!(!out.feasible);
        assert_eq!(out.d2_min, None);
    }

    #[test]
    fn exact_efficiency_tracks_asymptotic() {
        let out = carnot_run(1_000_000, 0.4, 0.2, 100, CountMode::Exact).unwrap();
        assert!(out.feasible);
        let gap = out.gap.unwrap().abs();
        assert!(gap <= 0.02, "gap {gap}");
        // d2_min lands at ceil of the real crossing
        assert_eq!(out.d2_min, Some(30));
    }

    #[test]
    fn threshold_gap_is_first_order_in_d1() {
        // halving d1 halves the continuous-crossing gap (ratio ~2)
        for &(t1, t2) in &[(0.4, 0.2), (0.45, 0.1), (0.3, 0.25)] {
            let g1 = carnot_run(1_000_000, t1, t2, 100, CountMode::Exact)
                .unwrap()
                .gap_threshold
                .unwrap()
                .abs();
            let g2 = carnot_run(1_000_000, t1, t2, 50, CountMode::Exact)
                .unwrap()
                .gap_threshold
                .unwrap()
                .abs();
            let ratio = g1 / g2;
            assert!(
                (1.8..=2.2).contains(&ratio),
                "({t1},{t2}): ratio {ratio} (gaps {g1}, {g2})"
            );
        }
    }

    #[test]
    fn efficiency_monotone_in_cold_temperature() {
        // colder sink, better efficiency
        let mut last = f64::INFINITY;
        for &t2 in &[0.05, 0.1, 0.15, 0.2, 0.25, 0.3] {
            let eta = carnot_run(10_000, 0.35, t2, 10, CountMode::Asymptotic)
                .unwrap()
                .eta_asymptotic
                .unwrap();
            assert!(eta < last, "eta not decreasing toward hot t2");
            last = eta;
        }
    }

    #[test]
    fn negative_branch_is_flagged_not_asserted() {
        let out = carnot_run(1000, 0.7, 0.2, 10, CountMode::Exact).unwrap();
        assert_eq!(out.regime, CarnotRegime::OutsideTheoremRegime);
        // removing 1s above the mode grows the hot side count: free deposit
        assert_eq!(out.d2_min, Some(0));
        assert_eq!(out.eta_exact, Some(1.0));
    }

    #[test]
    fn carnot_validation_errors() {
        assert!(matches!(
            carnot_run(100, 0.0, 0.2, 1, CountMode::Exact),
            Err(CarnotError::FractionOutOfRange { name: "t1", .. })
        ));
        assert!(matches!(
            carnot_run(100, 0.4, 0.2, 90, CountMode::Exact),
            Err(CarnotError::BadTransfer { .. })
        ));
    }
}
