//! Property tests for the counting kernels, codecs, and estimator contract.

use proptest::prelude::*;

use bitthermo::binom::{binomial_u128, enumerate_microstates, log2_binomial};
use bitthermo::bits::{generate_bernoulli, generate_exact, BitString};
use bitthermo::complexity::{builtin_estimators, structural_temperature, DEFAULT_DK_FLOOR};
use bitthermo::equilibrium::wilson_interval;
use bitthermo::temperature::{occupancy_from_temperature, statistical_temperature};
use bitthermo::{Macrostate, Seed};

proptest! {
    #[test]
    fn weight_cache_survives_flips(bits in prop::collection::vec(any::<bool>(), 1..512), flips in prop::collection::vec(any::<usize>(), 0..16)) {
        let mut s = BitString::from_bits(bits.iter().copied());
        prop_assert_eq!(s.weight(), s.recompute_weight());
        for f in flips {
            s = s.with_flipped(f % s.len());
            prop_assert_eq!(s.weight(), s.recompute_weight());
        }
    }

    #[test]
    fn codecs_round_trip(bits in prop::collection::vec(any::<bool>(), 1..700)) {
        let s = BitString::from_bits(bits.iter().copied());
        prop_assert_eq!(BitString::from_text(&s.to_text()).unwrap(), s.clone());
        prop_assert_eq!(BitString::from_packed(&s.to_packed()).unwrap(), s);
    }

    #[test]
    fn log_binomial_symmetry(n in 1usize..5000, frac in 0.0f64..1.0) {
        let k = (frac * n as f64) as usize;
        prop_assert_eq!(log2_binomial(n, k).unwrap(), log2_binomial(n, n - k).unwrap());
    }

    #[test]
    fn enumeration_size_matches_formula(n in 1usize..=14, pick in any::<u64>()) {
        let k = (pick % (n as u64 + 1)) as usize;
        let states = enumerate_microstates(Macrostate::new(n, k).unwrap(), 1 << 20).unwrap();
        prop_assert_eq!(states.len() as u128, binomial_u128(n, k).unwrap());
        // lexicographically sorted, no duplicates
        for w in states.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn occupancy_inverts_temperature(t in 0.01f64..0.99) {
        prop_assume!((t - 0.5).abs() > 1e-6);
        let st = statistical_temperature(t).unwrap();
        let back = occupancy_from_temperature(st.value).unwrap();
        prop_assert!((back - t).abs() < 1e-12);
    }

    #[test]
    fn exact_generation_hits_weight(n in 1usize..2000, pick in any::<u64>(), seed in any::<u64>()) {
        let k = (pick % (n as u64 + 1)) as usize;
        let s = generate_exact(n, k, Seed(seed)).unwrap();
        prop_assert_eq!(s.weight(), k);
    }

    #[test]
    fn wilson_contains_point_estimate(successes in 0u32..=200, extra in 0u32..500) {
        let trials = successes + extra;
        prop_assume!(trials > 0);
        let p = successes as f64 / trials as f64;
        let (lo, hi) = wilson_interval(successes, trials);
        prop_assert!(lo <= p && p <= hi);
        prop_assert!((0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
    }
}

#[test]
fn weight_cache_at_large_n() {
    for seed in 0..4u64 {
        let s = generate_bernoulli(1_000_000, 0.3, Seed(seed)).unwrap();
        assert_eq!(s.weight(), s.recompute_weight());
        let f = s.with_flipped(777_777);
        assert_eq!(f.weight(), f.recompute_weight());
    }
}

#[test]
fn enumeration_sizes_up_to_twenty() {
    for n in 15..=20usize {
        for k in [0usize, 1, n / 3, n / 2, n - 1, n] {
            let states = enumerate_microstates(Macrostate::new(n, k).unwrap(), 1 << 21).unwrap();
            assert_eq!(
                states.len() as u128,
                binomial_u128(n, k).unwrap(),
                "({n},{k})"
            );
        }
    }
}

#[test]
fn core_values_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<BitString>();
    assert_send_sync::<Macrostate>();
    assert_send_sync::<Seed>();
    assert_send_sync::<bitthermo::complexity::ComplexityEstimate>();
    assert_send_sync::<bitthermo::complexity::StrucTemperature>();
    assert_send_sync::<bitthermo::carnot::CarnotOutcome>();
    assert_send_sync::<bitthermo::equilibrium::EquilibriumVerdict>();
    assert_send_sync::<bitthermo::transform::TransformationTable>();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn estimator_contract_bounds(t in 0.0f64..=1.0, n in 64usize..2048, seed in any::<u64>()) {
        let s = generate_bernoulli(n, t, Seed(seed)).unwrap();
        for e in builtin_estimators() {
            let bits = e.description_bits(&s);
            prop_assert!(bits >= 0.0);
            prop_assert!(bits <= n as f64 + e.max_overhead_bits(n) + 1e-9, "{} on n={n}", e.id());
        }
    }

    #[test]
    fn structural_probe_count_and_determinism(n in 128usize..512, t in 0.2f64..0.8, seed in any::<u64>()) {
        let s = generate_bernoulli(n, t, Seed(seed)).unwrap();
        prop_assume!(s.weight() < n);
        let zeros = n - s.weight();
        let budget = 32usize;
        for e in builtin_estimators() {
            let a = structural_temperature(&s, e.as_ref(), budget, Seed(1), DEFAULT_DK_FLOOR).unwrap();
            let b = structural_temperature(&s, e.as_ref(), budget, Seed(1), DEFAULT_DK_FLOOR).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(a.sample_size, zeros.min(budget));
            prop_assert_eq!(a.sampled, zeros > budget);
        }
    }
}
