use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use horizon_core::hawking::{
    entanglement_threshold_alpha, entanglement_threshold_alpha_with, gisin_density,
    gisin_density_bloch, gisin_hawking_coherence, gisin_hawking_resources, hawking_channel_accessible,
    hawking_kraus, GisinParams, HawkingEnv,
};
use horizon_core::qmat::{wootters_concurrence, CMatrix};
use horizon_core::resources::{
    l1_coherence, resource_report, trace_distance_discord_closed, XState,
};
use proptest::prelude::*;

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

#[test]
fn channel_consistency_and_discord_equality_on_grid() {
    for &alpha in &linspace(0.0, 1.0, 20) {
        for &phi in &linspace(0.0, FRAC_PI_2, 20) {
            let p = GisinParams::new(alpha, phi).unwrap();
            let rho = gisin_density(&p).unwrap().to_density().unwrap();
            for &theta in &linspace(0.0, 12.0, 20) {
                let out = hawking_channel_accessible(&rho, theta).unwrap();
                let expected = (alpha * (2.0 * phi).sin()).abs() / (1.0 + (-theta).exp()).sqrt();
                let c = l1_coherence(&out);
                assert!((c - expected).abs() < 1e-12, "{alpha} {phi} {theta}");
                assert!((gisin_hawking_coherence(&p, theta) - expected).abs() < 1e-15);
                let x = XState::from_density(&out, 1e-12).unwrap();
                assert!((trace_distance_discord_closed(&x) - c).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn kraus_operators_are_trace_preserving() {
    for theta in linspace(0.0, 20.0, 41) {
        let [k0, k1] = hawking_kraus(theta);
        let sum = &(&k0.dagger() * &k0) + &(&k1.dagger() * &k1);
        assert!(sum.max_abs_diff(&CMatrix::identity(2)) < 1e-15);
    }
}

#[test]
fn coherence_degrades_monotonically_with_temperature() {
    for alpha in [0.2, 0.6, 1.0] {
        for phi in [0.3, FRAC_PI_4, 1.2] {
            let p = GisinParams::new(alpha, phi).unwrap();
            let values: Vec<f64> = linspace(0.05, 50.0, 400)
                .into_iter()
                .map(|t| {
                    gisin_hawking_resources(&p, &HawkingEnv::new(10.0, t, 1.1).unwrap())
                        .unwrap()
                        .coherence
                })
                .collect();
            assert!(values.windows(2).all(|w| w[1] < w[0]), "{alpha} {phi}");
        }
    }
}

#[test]
fn coherence_saturates_at_infinite_temperature() {
    for alpha in [0.2, 0.5, 1.0] {
        for phi in [0.3, FRAC_PI_4, 1.2] {
            let p = GisinParams::new(alpha, phi).unwrap();
            let env = HawkingEnv::new(10.0, 1e12, 1.1).unwrap();
            let c = gisin_hawking_resources(&p, &env).unwrap().coherence;
            let limit = alpha * (2.0 * phi).sin() / 2f64.sqrt();
            assert!((c - limit).abs() < 1e-9, "{c} vs {limit}");
            assert!(c > 0.0);
        }
    }
}

#[test]
fn zero_temperature_reproduces_input_state() {
    for alpha in linspace(0.0, 1.0, 11) {
        for phi in linspace(0.05, FRAC_PI_2 - 0.05, 7) {
            let p = GisinParams::new(alpha, phi).unwrap();
            let input = resource_report(&gisin_density(&p).unwrap()).unwrap();
            let env = HawkingEnv::new(10.0, 0.0, 1.1).unwrap();
            let frozen = gisin_hawking_resources(&p, &env).unwrap();
            assert!((frozen.coherence - input.coherence).abs() < 1e-15);
            assert!((frozen.discord - input.discord).abs() < 1e-15);
            assert_eq!(frozen.concurrence, input.concurrence);
            assert_eq!(frozen.bures, input.bures);
        }
    }
}

#[test]
fn threshold_bisection_agrees_across_concurrence_routes() {
    let exact = (17f64.sqrt() - 3.0) / 2.0;
    let via_formula = entanglement_threshold_alpha(FRAC_PI_4, 0.0, 1e-10).unwrap();
    let via_wootters =
        entanglement_threshold_alpha_with(FRAC_PI_4, 0.0, 1e-10, wootters_concurrence).unwrap();
    assert!((via_formula - exact).abs() < 1e-8);
    assert!((via_wootters - exact).abs() < 1e-8);
    // colder means entangled for smaller alpha
    let cold = entanglement_threshold_alpha(FRAC_PI_4, 3.0, 1e-10).unwrap();
    assert!(cold < via_formula);
    let frozen = entanglement_threshold_alpha(FRAC_PI_4, f64::INFINITY, 1e-10).unwrap();
    assert!((frozen - 0.5).abs() < 1e-8);
    assert!(cold > frozen);
}

proptest! {
    #[test]
    fn bloch_and_direct_forms_agree(alpha in 0.0f64..=1.0, phi in 0.0f64..FRAC_PI_2) {
        let p = GisinParams::new(alpha, phi).unwrap();
        let direct = gisin_density(&p).unwrap().to_matrix();
        let bloch = gisin_density_bloch(&p).unwrap();
        prop_assert!(bloch.matrix().max_abs_diff(&direct) < 1e-14);
    }

    #[test]
    fn channel_output_is_a_state(alpha in 0.0f64..=1.0, phi in 0.0f64..FRAC_PI_2, theta in 0.0f64..30.0) {
        let p = GisinParams::new(alpha, phi).unwrap();
        let rho = gisin_density(&p).unwrap().to_density().unwrap();
        let out = hawking_channel_accessible(&rho, theta).unwrap();
        prop_assert!((out.matrix().trace().re - 1.0).abs() < 1e-14);
        prop_assert!(out.min_eigenvalue() >= -1e-14);
        prop_assert!(XState::from_density(&out, 1e-14).is_ok());
    }
}
