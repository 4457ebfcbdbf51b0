//! Seeded-ensemble checks of the equilibrium module's statistical claims.
//! Tolerances follow the shipped defaults; the measured margins live in the
//! repository's calibration.json.

use bitthermo::bits::{generate_bernoulli, BitString};
use bitthermo::complexity::{ComplexityEstimator, Dictionary};
use bitthermo::equilibrium::{is_heat_bath, pair_equilibrium, EquilibriumConfig};
use bitthermo::temperature::TempFlag;
use bitthermo::Seed;

fn cfg_with_budget(probe_budget: usize) -> EquilibriumConfig {
    EquilibriumConfig {
        probe_budget,
        ..EquilibriumConfig::default()
    }
}

#[test]
fn bernoulli_ensemble_is_heat_bath_with_low_failure_rate() {
    // 50 seeds at n = 2^16; at most one miss tolerated (2%), and the
    // temperature-equality and direct entropy criteria must agree on at
    // least 95% of the ensemble.
    let n = 1usize << 16;
    let cfg = cfg_with_budget(64);
    let mut hits = 0u32;
    let mut agree = 0u32;
    for i in 0..50u64 {
        let seed = Seed(0xE05EED).derive(i);
        let s = generate_bernoulli(n, 0.3, seed).unwrap();
        let v = is_heat_bath(&s, &Dictionary, seed, &cfg).unwrap();
        hits += v.is_heat_bath as u32;
        agree += (v.is_heat_bath == v.direct.within) as u32;
        assert_eq!(v.flag, TempFlag::Ok);
    }
    assert!(hits >= 49, "only {hits}/50 heat-bath verdicts");
    assert!(agree >= 48, "criteria agree on only {agree}/50");
}

#[test]
fn different_temperature_pairs_always_separate() {
    // |t - t'| >= 0.1 at n = 2^14: no pair may pass, across the branch and
    // straddling the pole.
    let n = 1usize << 14;
    let tol = EquilibriumConfig::default().pair_tol;
    for &(t1, t2) in &[
        (0.2, 0.3),
        (0.3, 0.4),
        (0.25, 0.35),
        (0.45, 0.55),
        (0.2, 0.4),
    ] {
        for i in 0..50u64 {
            let seed = Seed(0x5E9A7A7E).derive(i);
            let a = generate_bernoulli(n, t1, seed.derive(1)).unwrap();
            let b = generate_bernoulli(n, t2, seed.derive(2)).unwrap();
            let r = pair_equilibrium(&a, &b, &Dictionary, tol).unwrap();
            assert!(
                !r.in_equilibrium,
                "({t1},{t2}) seed {i}: separated baths judged in equilibrium (slack {} bits)",
                r.slack_bits
            );
        }
    }
}

#[test]
fn reflexive_pairs_fail_whenever_content_is_nontrivial() {
    // Any string whose description length clears the coding headers by a
    // margin is never judged in equilibrium with its own copy.
    let n = 1usize << 13;
    let tol = EquilibriumConfig::default().pair_tol;
    let coder = Dictionary;
    let margin_bits = tol * (2 * n) as f64 + 200.0;

    let mut inputs: Vec<BitString> = Vec::new();
    for i in 0..10u64 {
        let t = 0.08 + 0.09 * i as f64;
        inputs.push(generate_bernoulli(n, t, Seed(0x0EF1E8).derive(i)).unwrap());
    }
    // structured but still above the margin: noisy periodic content
    inputs.push(BitString::from_bits((0..n).map(|i| {
        let mut rng = Seed(0xBEE).derive((i / 64) as u64).rng();
        (i % 2 == 1) ^ (rng.next_f64() < 0.2)
    })));

    for s in &inputs {
        let single = coder.description_bits(s);
        assert!(
            single >= margin_bits,
            "input too simple for the claim: {single} bits"
        );
        let r = pair_equilibrium(s, s, &coder, tol).unwrap();
        assert!(!r.in_equilibrium, "reflexive pair passed at {single} bits");
    }
}

#[test]
fn pair_relation_is_symmetric_at_estimator_resolution() {
    // Concatenation order shifts the estimate by a bounded constant and
    // never flips a verdict in these ensembles.
    let n = 1usize << 14;
    let tol = EquilibriumConfig::default().pair_tol;
    let coder = Dictionary;
    let mut max_diff: f64 = 0.0;
    for &(t1, t2) in &[(0.3, 0.3), (0.25, 0.35), (0.2, 0.4)] {
        for i in 0..20u64 {
            let seed = Seed(0x57AB1E).derive(i);
            let a = generate_bernoulli(n, t1, seed.derive(1)).unwrap();
            let b = generate_bernoulli(n, t2, seed.derive(2)).unwrap();
            let ab = pair_equilibrium(&a, &b, &coder, tol).unwrap();
            let ba = pair_equilibrium(&b, &a, &coder, tol).unwrap();
            assert_eq!(
                ab.in_equilibrium, ba.in_equilibrium,
                "verdict flipped by order"
            );
            max_diff = max_diff.max((ab.k_concat.bits - ba.k_concat.bits).abs());
        }
    }
    assert!(max_diff <= 64.0, "order asymmetry {max_diff} bits");
}
