//! Acceptance criteria for the horizon-core models. Each check recomputes
//! its quantities from scratch and reports a verdict with the measured values.

use std::f64::consts::FRAC_PI_4;
use std::time::{Duration, Instant};

use horizon_core::detectors::{
    detector_resources_closed, entanglement_threshold_kappa, equilibrium_state, omega_hh,
    omega_unruh, unruh_critical_temperature, OmegaConvention,
};
use horizon_core::dynamics::{evolve, kappa0_of, EvolutionConfig, KossakowskiSpec};
use horizon_core::hawking::{
    entanglement_threshold_alpha, entanglement_threshold_alpha_with, gisin_density,
    gisin_hawking_resources, hawking_channel_accessible, GisinParams, HawkingEnv,
};
use horizon_core::qmat::wootters_concurrence;
use horizon_core::resources::{
    hellinger_coherence_oracle, l1_coherence, trace_distance_discord_closed,
    trace_distance_discord_oracle, xstate_concurrence, DiscordOracleOptions, XState,
};
use horizon_core::sampling::{random_density, random_xstate, with_kappa0};
use horizon_core::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Verdict and a one-line summary of the measured values.
pub struct Outcome {
    pub pass: bool,
    pub detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

fn gisin(alpha: f64, phi: f64, omega: f64, t: f64, r0: f64) -> Result<horizon_core::ResourceReport> {
    gisin_hawking_resources(&GisinParams::new(alpha, phi)?, &HawkingEnv::new(omega, t, r0)?)
}

fn zero_temperature_anchor() -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for t in [0.0, 1e-12] {
        let r = gisin(1.0, FRAC_PI_4, 10.0, t, 1.1)?;
        for v in [r.coherence, r.discord, r.bures] {
            worst = worst.max((v - 1.0).abs());
        }
    }
    outcome(worst <= 1e-12, format!("max |value - 1| = {worst:.3e} (tol 1e-12)"))
}

fn low_temperature_plateau() -> Result<Outcome> {
    let mut worst = (0.0, 0.0, 0.0);
    for alpha in [0.2, 0.4, 0.6, 0.8, 1.0] {
        for t in linspace(0.01, 1.5, 150) {
            let dev = (gisin(alpha, FRAC_PI_4, 10.0, t, 1.1)?.coherence - alpha).abs();
            if dev > worst.0 {
                worst = (dev, alpha, t);
            }
        }
    }
    let (dev, alpha, t) = worst;
    outcome(
        dev <= 0.01,
        format!("max |C_H - alpha| = {dev:.4} at alpha = {alpha}, T_H = {t:.3} (tol 0.01)"),
    )
}

fn infinite_temperature_threshold() -> Result<Outcome> {
    let formula = entanglement_threshold_alpha(FRAC_PI_4, 0.0, 1e-10)?;
    let wootters = entanglement_threshold_alpha_with(FRAC_PI_4, 0.0, 1e-10, wootters_concurrence)?;
    let pass = (formula - 0.5616).abs() <= 1e-3 && (wootters - 0.5616).abs() <= 1e-3;
    outcome(
        pass,
        format!("alpha* = {formula:.6} (X-state), {wootters:.6} (Wootters); target 0.5616 +- 0.001"),
    )
}

fn infinite_temperature_asymptote() -> Result<Outcome> {
    let c = gisin(1.0, FRAC_PI_4, 10.0, 1e13, 1.1)?.coherence;
    let exact = (c - std::f64::consts::FRAC_1_SQRT_2).abs();
    let read = (c - 0.75).abs();
    outcome(
        exact <= 1e-9 && read <= 0.05,
        format!("C_H = {c:.9}; |C_H - 1/sqrt2| = {exact:.2e} (tol 1e-9); |C_H - 0.75| = {read:.3} (tol 0.05)"),
    )
}

fn unruh_anchors() -> Result<Outcome> {
    let eps = 5.0;
    let cold = detector_resources_closed(omega_unruh(1e-6, eps)?, 0.1)?;
    let c_ok = (cold.coherence - 0.225).abs() <= 1e-12;
    let b_ok = (cold.bures - 0.148).abs() <= 0.005;
    let series: Vec<f64> = linspace(1e-3, 200.0, 2000)
        .into_iter()
        .map(|t| Ok(detector_resources_closed(omega_unruh(t, eps)?, -1.5)?.coherence))
        .collect::<Result<_>>()?;
    let monotone = series.windows(2).all(|w| w[1] <= w[0]);
    let (first, last) = (series[0], series[series.len() - 1]);
    let ends = (first - 0.625).abs() <= 1e-12 && (last - 0.5).abs() <= 1e-3;
    outcome(
        c_ok && b_ok && monotone && ends,
        format!(
            "kappa0 = 0.1: C_H = {:.12}, B_d = {:.4}; kappa0 = -1.5: C_H {first:.4} -> {last:.4}, monotone = {monotone}",
            cold.coherence, cold.bures
        ),
    )
}

fn sudden_death_and_revival() -> Result<Outcome> {
    let eps = 5.0;
    let grid = linspace(0.0, 1.0, 1000);
    let mut problems = Vec::new();
    for kappa0 in [0.1f64, 0.3, 0.6, 1.0] {
        let root = kappa0.sqrt();
        let at_root = detector_resources_closed(root, kappa0)?.coherence;
        if at_root > 1e-15 {
            problems.push(format!("C_H({root}) = {at_root:e} for kappa0 = {kappa0}"));
        }
        if let Some(tc) = unruh_critical_temperature(kappa0, eps) {
            let c = detector_resources_closed(omega_unruh(tc, eps)?, kappa0)?.coherence;
            if c > 1e-12 {
                problems.push(format!("C_H(T_c) = {c:e} for kappa0 = {kappa0}"));
            }
        }
        let zeros = grid
            .iter()
            .filter(|&&w| detector_resources_closed(w, kappa0).map(|r| r.coherence).unwrap_or(1.0) < 1e-12)
            .count();
        let spacing = 1.0 / 999.0;
        let near: Vec<f64> = grid.iter().copied().filter(|w| (w - root).abs() < spacing).collect();
        if zeros > near.len() {
            problems.push(format!("{zeros} zeros for kappa0 = {kappa0}"));
        }
    }
    for kappa0 in [-2.0, -1.5, -0.6] {
        let min = grid
            .iter()
            .map(|&w| detector_resources_closed(w, kappa0).map(|r| r.coherence))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min <= 0.0 {
            problems.push(format!("C_H vanishes for kappa0 = {kappa0}"));
        }
    }
    // entanglement: dead below the threshold ratio, alive above, one sign change
    for kappa0 in [-2.5, -1.5, -0.9, -0.3, 0.1, 0.6, 0.95] {
        let alive: Vec<bool> = grid
            .iter()
            .map(|&w| Ok(xstate_concurrence(&equilibrium_state(w, kappa0)?) > 0.0))
            .collect::<Result<_>>()?;
        let changes = alive.windows(2).filter(|w| w[0] != w[1]).count();
        let consistent = grid
            .iter()
            .zip(&alive)
            .all(|(&w, &a)| {
                let k = entanglement_threshold_kappa(w).unwrap();
                (kappa0 - k).abs() < 1e-9 || a == (kappa0 < k)
            });
        let dead_then_alive = alive.windows(2).all(|w| !(w[0] && !w[1]));
        if changes > 1 || !consistent || !dead_then_alive {
            problems.push(format!("entanglement pattern broken for kappa0 = {kappa0}"));
        }
    }
    let pass = problems.is_empty();
    let detail = if pass {
        "single coherence zero at Omega = sqrt(kappa0); no revival of entanglement".to_string()
    } else {
        problems.join("; ")
    };
    outcome(pass, detail)
}

fn equilibrium_versus_dynamics() -> Result<Outcome> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut worst_state, mut worst_drift): (f64, f64) = (0.0, 0.0);
    let mut failures = 0;
    let epsilon = 5.0;
    for omega in [0.0, 0.3, 0.6, 0.85, 1.0] {
        for kappa0 in [-2.5, -1.2, -0.4, 0.3, 0.9] {
            let rho0 = with_kappa0(&random_density(&mut rng), kappa0)?;
            let spec = KossakowskiSpec::from_ratio(omega)?;
            let cfg = EvolutionConfig::for_spec(&spec, 500.0, 1e-10);
            let run = match evolve(&rho0, &spec, epsilon, &cfg) {
                Ok(run) => run,
                Err(_) => {
                    failures += 1;
                    continue;
                }
            };
            let expected = equilibrium_state(omega, kappa0)?.to_matrix();
            worst_state = worst_state.max(run.rho_final.matrix().max_abs_diff(&expected));
            let k0 = kappa0_of(&rho0);
            for s in &run.trajectory {
                worst_drift = worst_drift.max((s.kappa0 - k0).abs());
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && worst_state <= 1e-6 && worst_drift <= 1e-8 && elapsed <= Duration::from_secs(300),
        format!(
            "25 pairs: max entry error {worst_state:.2e} (tol 1e-6), kappa0 drift {worst_drift:.2e} (tol 1e-8), {failures} unconverged, {:.1}s (limit 300s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn oracle_suite() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut conc, mut coh): (f64, f64) = (0.0, 0.0);
    for _ in 0..10_000 {
        let x = random_xstate(&mut rng);
        let rho = x.to_density()?;
        conc = conc.max((xstate_concurrence(&x) - wootters_concurrence(&rho)).abs());
        coh = coh.max((l1_coherence(&rho) - hellinger_coherence_oracle(&rho)).abs());
    }

    let opts = DiscordOracleOptions {
        restarts: 64,
        ..Default::default()
    };
    let (mut gap_lo, mut gap_hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..100 {
        let x = random_xstate(&mut rng);
        let gap = trace_distance_discord_oracle(&x.to_density()?, &opts, &mut rng)
            - trace_distance_discord_closed(&x);
        gap_lo = gap_lo.min(gap);
        gap_hi = gap_hi.max(gap);
    }

    let mut equality: f64 = 0.0;
    for alpha in linspace(0.0, 1.0, 20) {
        for phi in linspace(0.0, std::f64::consts::FRAC_PI_2, 20) {
            let rho = gisin_density(&GisinParams::new(alpha, phi)?)?.to_density()?;
            for theta in linspace(0.0, 12.0, 20) {
                let out = hawking_channel_accessible(&rho, theta)?;
                let x = XState::from_density(&out, 1e-12)?;
                equality = equality.max((l1_coherence(&out) - trace_distance_discord_closed(&x)).abs());
            }
        }
    }
    for omega in linspace(0.0, 1.0, 50) {
        for kappa0 in linspace(-3.0, 1.0, 50) {
            let x = equilibrium_state(omega, kappa0)?;
            let c = l1_coherence(&x.to_density()?);
            equality = equality.max((c - trace_distance_discord_closed(&x)).abs());
        }
    }

    let pass = conc <= 1e-10 && coh <= 1e-10 && gap_lo >= -1e-3 && gap_hi <= 5e-3 && equality <= 1e-12;
    outcome(
        pass,
        format!(
            "concurrence {conc:.1e}, coherence {coh:.1e} (tol 1e-10); discord gap in [{gap_lo:.1e}, {gap_hi:.1e}] (allowed [-1e-3, 5e-3]); C_H = D_T within {equality:.1e} (tol 1e-12)"
        ),
    )
}

/// Temperature at which `Ω(T)² = κ₀`, by bisection on a log scale.
fn crossing_temperature(r0: f64, kappa0: f64, convention: OmegaConvention) -> Result<f64> {
    let excess = |t: f64| omega_hh(50.0, t, r0, convention).map(|w| w * w - kappa0);
    let (mut lo, mut hi) = (1e-3f64, 1e4f64);
    if !(excess(lo)? > 0.0 && excess(hi)? < 0.0) {
        return Err(horizon_core::Error::NoRoot {
            what: "Omega^2 - kappa0",
            lo,
            hi,
        });
    }
    for _ in 0..200 {
        let mid = (lo * hi).sqrt();
        if excess(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo * hi).sqrt())
}

fn hartle_hawking_ordering() -> Result<Outcome> {
    let r0s = [1.01, 1.05, 1.1, 1.2];
    let crossings: Vec<f64> = r0s
        .iter()
        .map(|&r0| crossing_temperature(r0, 0.6, OmegaConvention::TanhTheta))
        .collect::<Result<_>>()?;
    let increasing = crossings.windows(2).all(|w| w[1] > w[0]);
    let mut limit_gap: f64 = 0.0;
    for &r0 in &r0s {
        for kappa0 in [-2.0, 0.6] {
            for t in [1e-9, 1e12] {
                let tanh = omega_hh(50.0, t, r0, OmegaConvention::TanhTheta)?;
                let half = omega_hh(50.0, t, r0, OmegaConvention::HalfTheta)?;
                let a = detector_resources_closed(tanh, kappa0)?.coherence;
                let b = detector_resources_closed(half, kappa0)?.coherence;
                limit_gap = limit_gap.max((a - b).abs());
            }
        }
    }
    let shown: Vec<String> = crossings.iter().map(|t| format!("{t:.2}")).collect();
    outcome(
        increasing && limit_gap <= 1e-9,
        format!(
            "zero crossings T_H = [{}] for R0 = {r0s:?}; conventions differ by {limit_gap:.1e} in the limits",
            shown.join(", ")
        ),
    )
}

pub type Check = fn() -> Result<Outcome>;

/// Every criterion, in reporting order.
pub const CRITERIA: [(&str, Check); 9] = [
        ("gisin zero-temperature anchor", zero_temperature_anchor),
        ("low-temperature plateau", low_temperature_plateau),
        ("infinite-temperature entanglement threshold", infinite_temperature_threshold),
        ("infinite-temperature coherence asymptote", infinite_temperature_asymptote),
        ("unruh anchors", unruh_anchors),
        ("sudden death and revival", sudden_death_and_revival),
        ("equilibrium versus dynamics", equilibrium_versus_dynamics),
        ("oracle suite", oracle_suite),
        ("hartle-hawking crossing order", hartle_hawking_ordering),
    ];

/// Runs one check, folding errors into a failed outcome.
pub fn evaluate(check: Check) -> Outcome {
    check().unwrap_or_else(|e| Outcome {
        pass: false,
        detail: format!("error: {e}"),
    })
}
