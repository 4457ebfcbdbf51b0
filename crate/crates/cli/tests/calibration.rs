//! Ensemble calibration harness behind `--ignored`: measures the estimator
//! deviations the shipped tolerances must dominate, and prints the evidence
//! block that is frozen into the repository's calibration.json. Run with:
//!
//! ```text
//! cargo test -p bitthermo-cli --test calibration -- --ignored --nocapture
//! ```

use bitthermo::bits::generate_bernoulli;
use bitthermo::complexity::{BlockEntropy, ComplexityEstimator, Dictionary};
use bitthermo::entropy::entropy_derivative;
use bitthermo::equilibrium::{is_heat_bath, pair_equilibrium, EquilibriumConfig};
use bitthermo::Seed;

#[derive(serde::Serialize)]
struct PairStats {
    t_pair: (f64, f64),
    n: usize,
    seeds: u64,
    min_abs_dev_bits_per_symbol: f64,
    max_abs_dev_bits_per_symbol: f64,
}

fn pair_deviation_stats(t1: f64, t2: f64, n: usize, seeds: u64, base: u64) -> PairStats {
    let mut min_dev = f64::INFINITY;
    let mut max_dev = f64::NEG_INFINITY;
    for i in 0..seeds {
        let seed = Seed(base).derive(i);
        let a = generate_bernoulli(n, t1, seed.derive(0)).unwrap();
        let b = generate_bernoulli(n, t2, seed.derive(1)).unwrap();
        let r = pair_equilibrium(&a, &b, &Dictionary, 1.0).unwrap();
        let dev = (r.slack_bits / (2 * n) as f64).abs();
        min_dev = min_dev.min(dev);
        max_dev = max_dev.max(dev);
    }
    PairStats {
        t_pair: (t1, t2),
        n,
        seeds,
        min_abs_dev_bits_per_symbol: min_dev,
        max_abs_dev_bits_per_symbol: max_dev,
    }
}

#[test]
#[ignore = "calibration harness; run explicitly to regenerate evidence"]
fn calibration_evidence() {
    let mut same_t = Vec::new();
    for &n in &[1usize << 10, 1 << 11, 1 << 12, 1 << 14, 1 << 16] {
        same_t.push(pair_deviation_stats(0.3, 0.3, n, 50, 0xCA11));
    }
    let mut diff_t = Vec::new();
    for &(a, b) in &[
        (0.2, 0.4),
        (0.2, 0.3),
        (0.3, 0.4),
        (0.25, 0.35),
        (0.45, 0.55),
    ] {
        diff_t.push(pair_deviation_stats(a, b, 1 << 14, 50, 0xCA12));
    }

    // single-string heat-bath ensemble: relative inverse-temperature gap
    // and the direct K/n vs h(t) deviation, dictionary coder
    let cfg = EquilibriumConfig {
        probe_budget: 64,
        ..EquilibriumConfig::default()
    };
    let mut max_rel_gap = 0.0f64;
    let mut max_direct_dev = 0.0f64;
    let mut heat_bath_hits = 0u32;
    let mut criteria_agree = 0u32;
    let n = 1usize << 16;
    for i in 0..50u64 {
        let s = generate_bernoulli(n, 0.3, Seed(0xCA13).derive(i)).unwrap();
        let v = is_heat_bath(&s, &Dictionary, Seed(0xCA13).derive(i), &cfg).unwrap();
        max_rel_gap = max_rel_gap.max(v.relative_gap);
        max_direct_dev = max_direct_dev.max(v.direct.deviation_per_n.abs());
        heat_bath_hits += v.is_heat_bath as u32;
        criteria_agree += (v.is_heat_bath == v.direct.within) as u32;
    }

    // structural vs statistical ordering margin, weight-class coder
    let mut min_ratio = f64::INFINITY;
    for i in 0..50u64 {
        let s = generate_bernoulli(1 << 14, 0.3, Seed(0xCA14).derive(i)).unwrap();
        let st = bitthermo::complexity::structural_temperature(
            &s,
            &BlockEntropy,
            4096,
            Seed(0xCA14).derive(i),
            1.0,
        )
        .unwrap();
        let inv_stat = entropy_derivative(s.hamming_fraction()).unwrap();
        min_ratio = min_ratio.min(st.max_delta_k_bits / inv_stat);
    }

    // concatenation-order asymmetry of the dictionary coder
    let mut max_order_diff_bits = 0.0f64;
    for i in 0..20u64 {
        let a = generate_bernoulli(1 << 14, 0.25, Seed(0xCA15).derive(i)).unwrap();
        let b = generate_bernoulli(1 << 14, 0.35, Seed(0xCA16).derive(i)).unwrap();
        let ab = Dictionary.description_bits(&a.concat(&b));
        let ba = Dictionary.description_bits(&b.concat(&a));
        max_order_diff_bits = max_order_diff_bits.max((ab - ba).abs());
    }

    let evidence = serde_json::json!({
        "pair_same_fraction": same_t,
        "pair_different_fraction": diff_t,
        "heat_bath_ensemble": {
            "t": 0.3, "n": n, "seeds": 50, "probe_budget": 64,
            "max_relative_inverse_gap": max_rel_gap,
            "max_direct_deviation_bits_per_symbol": max_direct_dev,
            "heat_bath_verdicts": heat_bath_hits,
            "criteria_agreement": criteria_agree,
        },
        "structural_vs_statistical": {
            "t": 0.3, "n": 1 << 14, "seeds": 50, "estimator": "block-entropy",
            "min_inverse_ratio": min_ratio,
        },
        "concatenation_order": {
            "n": 1 << 14, "pairs": 20,
            "max_order_difference_bits": max_order_diff_bits,
        },
    });
    println!("{}", serde_json::to_string_pretty(&evidence).unwrap());
}
