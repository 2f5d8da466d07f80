//! Kossakowski–Lindblad evolution of two detectors in a common bath.
//!
//! ```text
//! dρ/dt = −i[H, ρ] + Σ_ij X_ij/2 (2 S_j ρ S_i − {S_i S_j, ρ})
//! ```
//!
//! with collective operators `S_i = σ_i⊗1 + 1⊗σ_i`, which is the double sum
//! over field directions and detector indices for a shared bath, and
//! `H = (ε/2) Σ_j r_j S_j` (bare level spacing, no Lamb shift).

use std::io::{self, Write};

use crate::error::{domain, Error, Result};
use crate::qmat::{kron, pauli, CMatrix, DensityMatrix, C64, I, ZERO};

/// Coefficients of the Kossakowski matrix
/// `X_ij = Ω₊ δ_ij − i Ω₋ ε_ijk r_k + Ω₀ r_i r_j`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KossakowskiSpec {
    pub gamma_plus: f64,
    pub gamma_minus: f64,
    pub gamma_zero: f64,
    pub r: [f64; 3],
}

impl KossakowskiSpec {
    pub fn new(gamma_plus: f64, gamma_minus: f64, gamma_zero: f64, r: [f64; 3]) -> Result<Self> {
        let spec = Self {
            gamma_plus,
            gamma_minus,
            gamma_zero,
            r,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `Ω₊ = 1`, `Ω₋ = Ω`, `Ω₀ = 0`, `r = (0, 0, 1)`.
    pub fn from_ratio(omega: f64) -> Result<Self> {
        Self::new(1.0, omega, 0.0, [0.0, 0.0, 1.0])
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma_plus >= 0.0) {
            return Err(domain(format!("gamma_plus = {} must be >= 0", self.gamma_plus)));
        }
        if !(self.gamma_minus.abs() <= self.gamma_plus) {
            return Err(domain(format!(
                "|gamma_minus| = {} must not exceed gamma_plus = {}",
                self.gamma_minus.abs(),
                self.gamma_plus
            )));
        }
        if !self.gamma_zero.is_finite() {
            return Err(domain("gamma_zero must be finite"));
        }
        let norm = self.r.iter().map(|v| v * v).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(domain(format!("r has norm {norm}, expected 1")));
        }
        Ok(())
    }

    /// `Ω₋/Ω₊`, the only combination the equilibrium depends on.
    pub fn ratio(&self) -> f64 {
        if self.gamma_plus == 0.0 {
            0.0
        } else {
            self.gamma_minus / self.gamma_plus
        }
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

pub fn kossakowski_matrix(spec: &KossakowskiSpec) -> CMatrix {
    let r = spec.r;
    CMatrix::from_fn(3, 3, |i, j| {
        let delta = if i == j { spec.gamma_plus } else { 0.0 };
        let eps: f64 = (0..3).map(|k| levi_civita(i, j, k) * r[k]).sum();
        C64::new(delta + spec.gamma_zero * r[i] * r[j], 0.0) - I * (spec.gamma_minus * eps)
    })
}

/// Precomputed right-hand side of the master equation.
#[derive(Clone, Debug)]
pub struct Generator {
    hamiltonian: CMatrix,
    /// Non-zero `(X_ij, S_j, S_i)` jump terms.
    jumps: Vec<(C64, CMatrix, CMatrix)>,
    /// `Σ X_ij S_i S_j`.
    decay: CMatrix,
}

impl Generator {
    pub fn new(spec: &KossakowskiSpec, epsilon: f64) -> Result<Self> {
        spec.validate()?;
        let collective: Vec<CMatrix> = (1..=3)
            .map(|a| &kron(&pauli(a), &pauli(0)) + &kron(&pauli(0), &pauli(a)))
            .collect();
        let hamiltonian = (0..3).fold(CMatrix::zeros(4, 4), |acc, j| {
            &acc + &collective[j].scale_real(0.5 * epsilon * spec.r[j])
        });
        let x = kossakowski_matrix(spec);
        let mut jumps = Vec::new();
        let mut decay = CMatrix::zeros(4, 4);
        for i in 0..3 {
            for j in 0..3 {
                let xij = x[(i, j)];
                if xij == ZERO {
                    continue;
                }
                jumps.push((xij, collective[j].clone(), collective[i].clone()));
                decay = &decay + &(&collective[i] * &collective[j]).scale(xij);
            }
        }
        Ok(Self {
            hamiltonian,
            jumps,
            decay,
        })
    }

    pub fn apply(&self, rho: &CMatrix) -> CMatrix {
        let mut out = self.hamiltonian.commutator(rho).scale(-I);
        for (xij, sj, si) in &self.jumps {
            out = &out + &(&(sj * rho) * si).scale(*xij);
        }
        &out - &self.decay.anticommutator(rho).scale_real(0.5)
    }
}

/// `dρ/dt` for the given state.
pub fn lindblad_rhs(rho: &DensityMatrix, spec: &KossakowskiSpec, epsilon: f64) -> Result<CMatrix> {
    Ok(Generator::new(spec, epsilon)?.apply(rho.matrix()))
}

/// `κ₀ = Σ_i Tr[ρ σ_i⊗σ_i]`, conserved by the common-bath dynamics.
pub fn kappa0_of(rho: &DensityMatrix) -> f64 {
    kappa0_of_matrix(rho.matrix())
}

fn kappa0_of_matrix(m: &CMatrix) -> f64 {
    (1..=3)
        .map(|a| (m * &kron(&pauli(a), &pauli(a))).trace().re)
        .sum()
}

/// Checks the KMS ratio `Ω = (1 − e^{−βε})/(1 + e^{−βε})` against
/// `tanh(βε/2)`; returns the absolute mismatch.
pub fn kms_mismatch(beta: f64, epsilon: f64) -> Result<f64> {
    let boltzmann = (-beta * epsilon).exp();
    let from_kms = (1.0 - boltzmann) / (1.0 + boltzmann);
    let from_unruh = crate::detectors::omega_unruh(1.0 / beta, epsilon)?;
    Ok((from_kms - from_unruh).abs())
}

/// Step size and stopping rule for [`evolve`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvolutionConfig {
    pub dt: f64,
    pub max_time: f64,
    /// Converged once `‖dρ/dt‖_F` drops below this.
    pub convergence_tol: f64,
}

impl EvolutionConfig {
    /// Largest step accepted for a given `Ω₊`.
    pub fn max_dt(gamma_plus: f64) -> f64 {
        if gamma_plus > 0.0 {
            0.01 / (6.0 * gamma_plus)
        } else {
            f64::INFINITY
        }
    }

    /// The largest allowed step for `spec`, capped at 0.01.
    pub fn for_spec(spec: &KossakowskiSpec, max_time: f64, convergence_tol: f64) -> Self {
        Self {
            dt: Self::max_dt(spec.gamma_plus).min(0.01),
            max_time,
            convergence_tol,
        }
    }

    pub fn validate(&self, spec: &KossakowskiSpec) -> Result<()> {
        if !(self.dt > 0.0) {
            return Err(domain(format!("dt = {} must be positive", self.dt)));
        }
        let limit = Self::max_dt(spec.gamma_plus);
        if self.dt > limit * (1.0 + 1e-12) {
            return Err(domain(format!(
                "dt = {} exceeds the stability bound 0.01/(6 gamma_plus) = {limit}",
                self.dt
            )));
        }
        if !(self.max_time >= 0.0) {
            return Err(domain("max_time must be non-negative"));
        }
        if !(self.convergence_tol > 0.0) {
            return Err(domain("convergence_tol must be positive"));
        }
        Ok(())
    }

    /// Steps between stored trajectory samples, `ceil(0.1 / dt)`.
    pub fn sample_stride(&self) -> usize {
        ((0.1 / self.dt).ceil() as usize).max(1)
    }
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub t: f64,
    pub rho: CMatrix,
    pub kappa0: f64,
    /// `‖dρ/dt‖_F` at this state.
    pub residual: f64,
}

#[derive(Clone, Debug)]
pub struct Evolution {
    pub rho_final: DensityMatrix,
    pub trajectory: Vec<Sample>,
    pub converged: bool,
    pub time: f64,
    pub residual: f64,
}

fn rk4_step(gen: &Generator, rho: &CMatrix, k1: &CMatrix, dt: f64) -> CMatrix {
    let k2 = gen.apply(&(rho + &k1.scale_real(0.5 * dt)));
    let k3 = gen.apply(&(rho + &k2.scale_real(0.5 * dt)));
    let k4 = gen.apply(&(rho + &k3.scale_real(dt)));
    let incr = &(&(k1 + &k2.scale_real(2.0)) + &k3.scale_real(2.0)) + &k4;
    rho + &incr.scale_real(dt / 6.0)
}

/// Integrates the master equation with fixed-step RK4 until the generator
/// residual drops below `cfg.convergence_tol` or `cfg.max_time` is reached.
///
/// After each step the state is re-symmetrised and renormalised to unit
/// trace. Samples are stored every [`EvolutionConfig::sample_stride`] steps
/// plus the final state. Running out of time returns
/// [`Error::NotConverged`] carrying the partial evolution.
pub fn evolve(
    rho0: &DensityMatrix,
    spec: &KossakowskiSpec,
    epsilon: f64,
    cfg: &EvolutionConfig,
) -> Result<Evolution> {
    cfg.validate(spec)?;
    let gen = Generator::new(spec, epsilon)?;
    let stride = cfg.sample_stride();
    let mut rho = rho0.matrix().clone();
    let mut trajectory = Vec::new();
    let mut step = 0usize;

    loop {
        let t = step as f64 * cfg.dt;
        let k1 = gen.apply(&rho);
        let residual = k1.frobenius_norm();
        let converged = residual < cfg.convergence_tol;
        let out_of_time = t + 0.5 * cfg.dt > cfg.max_time;
        if step.is_multiple_of(stride) || converged || out_of_time {
            trajectory.push(Sample {
                t,
                rho: rho.clone(),
                kappa0: kappa0_of_matrix(&rho),
                residual,
            });
        }
        if converged || out_of_time {
            let evolution = Evolution {
                rho_final: DensityMatrix::from_matrix_unchecked(rho),
                trajectory,
                converged,
                time: t,
                residual,
            };
            return if converged {
                Ok(evolution)
            } else {
                Err(Error::NotConverged {
                    time: t,
                    residual,
                    evolution: Box::new(evolution),
                })
            };
        }
        let next = rk4_step(&gen, &rho, &k1, cfg.dt).hermitian_part();
        let tr = next.trace().re;
        rho = next.scale_real(1.0 / tr);
        step += 1;
    }
}

/// States at each of the ascending, non-negative `times`, each reached
/// exactly by splitting the remaining interval into equal RK4 steps no longer
/// than `dt`. Returns the state and its residual `‖dρ/dt‖_F`.
pub fn states_at(
    rho0: &DensityMatrix,
    spec: &KossakowskiSpec,
    epsilon: f64,
    dt: f64,
    times: &[f64],
) -> Result<Vec<(DensityMatrix, f64)>> {
    let cfg = EvolutionConfig {
        dt,
        max_time: times.last().copied().unwrap_or(0.0),
        convergence_tol: 1.0,
    };
    cfg.validate(spec)?;
    if times.iter().any(|t| !(*t >= 0.0)) || times.windows(2).any(|w| w[1] < w[0]) {
        return Err(domain("sample times must be non-negative and ascending"));
    }
    let gen = Generator::new(spec, epsilon)?;
    let mut rho = rho0.matrix().clone();
    let mut now = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let span = target - now;
        let steps = (span / dt).ceil() as usize;
        if steps > 0 {
            let h = span / steps as f64;
            for _ in 0..steps {
                let k1 = gen.apply(&rho);
                let next = rk4_step(&gen, &rho, &k1, h).hermitian_part();
                let tr = next.trace().re;
                rho = next.scale_real(1.0 / tr);
            }
        }
        now = target;
        let residual = gen.apply(&rho).frobenius_norm();
        out.push((DensityMatrix::from_matrix_unchecked(rho.clone()), residual));
    }
    Ok(out)
}

/// Writes a trajectory as CSV: `t`, real and imaginary parts of the 16
/// entries in row-major order, `kappa0`, `residual`.
pub fn write_trajectory_csv<W: Write>(samples: &[Sample], mut out: W) -> io::Result<()> {
    let mut header = vec!["t".to_string()];
    for i in 0..4 {
        for j in 0..4 {
            header.push(format!("re_{i}{j}"));
            header.push(format!("im_{i}{j}"));
        }
    }
    header.push("kappa0".into());
    header.push("residual".into());
    writeln!(out, "{}", header.join(","))?;
    for s in samples {
        let mut fields = vec![fmt_float(s.t)];
        for z in s.rho.entries() {
            fields.push(fmt_float(z.re));
            fields.push(fmt_float(z.im));
        }
        fields.push(fmt_float(s.kappa0));
        fields.push(fmt_float(s.residual));
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

/// Fixed 17-significant-digit rendering used by every CSV writer.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::equilibrium_state;
    use crate::qmat::hermitian_eigensystem;

    #[test]
    fn kossakowski_identity_case() {
        let x = kossakowski_matrix(&KossakowskiSpec::new(1.0, 0.0, 0.0, [0.0, 0.0, 1.0]).unwrap());
        assert!(x.max_abs_diff(&CMatrix::identity(3)) < 1e-15);
    }

    #[test]
    fn kossakowski_extreme_ratio_spectrum() {
        let x = kossakowski_matrix(&KossakowskiSpec::new(1.0, 1.0, 0.0, [0.0, 0.0, 1.0]).unwrap());
        let e = hermitian_eigensystem(&x).unwrap();
        for (got, want) in e.values.iter().zip([0.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-14, "{:?}", e.values);
        }
    }

    #[test]
    fn kossakowski_gamma_zero_shift() {
        let x = kossakowski_matrix(&KossakowskiSpec::new(1.0, 0.0, -0.5, [0.0, 0.0, 1.0]).unwrap());
        assert!(x.max_abs_diff(&CMatrix::diag(&[1.0, 1.0, 0.5])) < 1e-15);
    }

    #[test]
    fn spec_validation() {
        assert!(KossakowskiSpec::new(1.0, 1.5, 0.0, [0.0, 0.0, 1.0]).is_err());
        assert!(KossakowskiSpec::new(1.0, 0.5, 0.0, [0.0, 1.0, 1.0]).is_err());
        assert!(KossakowskiSpec::new(-1.0, 0.0, 0.0, [0.0, 0.0, 1.0]).is_err());
    }

    #[test]
    fn kappa0_reference_states() {
        assert!((kappa0_of(&DensityMatrix::singlet()) + 3.0).abs() < 1e-14);
        assert!(kappa0_of(&DensityMatrix::maximally_mixed()).abs() < 1e-15);
        assert!((kappa0_of(&DensityMatrix::phi_plus()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn singlet_is_dark() {
        let spec = KossakowskiSpec::new(1.0, 0.7, 0.3, [0.0, 0.0, 1.0]).unwrap();
        let rhs = lindblad_rhs(&DensityMatrix::singlet(), &spec, 5.0).unwrap();
        assert!(rhs.frobenius_norm() < 1e-12);
    }

    #[test]
    fn equilibrium_is_a_fixed_point() {
        let omega = 0.6;
        let rho = equilibrium_state(omega, 0.2).unwrap().to_density().unwrap();
        let rhs = lindblad_rhs(&rho, &KossakowskiSpec::from_ratio(omega).unwrap(), 5.0).unwrap();
        assert!(rhs.frobenius_norm() < 1e-12, "{}", rhs.frobenius_norm());
    }

    #[test]
    fn kms_identity() {
        for (beta, eps) in [(0.4, 5.0), (2.0, 1.0), (10.0, 0.3)] {
            assert!(kms_mismatch(beta, eps).unwrap() <= 1e-14);
        }
    }

    #[test]
    fn config_enforces_stability_bound() {
        let spec = KossakowskiSpec::from_ratio(0.5).unwrap();
        let cfg = EvolutionConfig {
            dt: 0.01,
            max_time: 1.0,
            convergence_tol: 1e-9,
        };
        assert!(cfg.validate(&spec).is_err());
        let cfg = EvolutionConfig::for_spec(&spec, 1.0, 1e-9);
        assert!(cfg.validate(&spec).is_ok());
        assert_eq!(cfg.sample_stride(), 60);
    }

    #[test]
    fn fixed_point_converges_immediately() {
        let omega = 0.4;
        let rho0 = equilibrium_state(omega, -1.0).unwrap().to_density().unwrap();
        let spec = KossakowskiSpec::from_ratio(omega).unwrap();
        let ev = evolve(&rho0, &spec, 5.0, &EvolutionConfig::for_spec(&spec, 10.0, 1e-9)).unwrap();
        assert!(ev.converged);
        assert_eq!(ev.time, 0.0);
        assert_eq!(ev.rho_final, rho0);
        assert_eq!(ev.trajectory.len(), 1);
    }

    #[test]
    fn running_out_of_time_reports_partial_state() {
        let spec = KossakowskiSpec::from_ratio(0.5).unwrap();
        let cfg = EvolutionConfig::for_spec(&spec, 0.05, 1e-12);
        match evolve(&DensityMatrix::phi_plus(), &spec, 5.0, &cfg) {
            Err(Error::NotConverged { evolution, .. }) => {
                assert!(!evolution.converged);
                assert!((evolution.rho_final.matrix().trace().re - 1.0).abs() < 1e-14);
            }
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn states_at_matches_evolve() {
        let spec = KossakowskiSpec::from_ratio(0.5).unwrap();
        let rho0 = DensityMatrix::phi_plus();
        let cfg = EvolutionConfig::for_spec(&spec, 0.5, 1e-14);
        let dt = cfg.dt;
        let run = match evolve(&rho0, &spec, 5.0, &cfg) {
            Err(Error::NotConverged { evolution, .. }) => *evolution,
            other => panic!("expected a partial run, got {other:?}"),
        };
        let got = states_at(&rho0, &spec, 5.0, dt, &[0.0, 0.25, run.time]).unwrap();
        assert!(got[0].0.matrix().max_abs_diff(rho0.matrix()) == 0.0);
        assert!(got[2].0.matrix().max_abs_diff(run.rho_final.matrix()) < 1e-12);
        assert!((got[2].1 - run.residual).abs() < 1e-10);
        assert!(states_at(&rho0, &spec, 5.0, dt, &[0.3, 0.1]).is_err());
    }

    #[test]
    fn trajectory_csv_layout() {
        let spec = KossakowskiSpec::from_ratio(0.5).unwrap();
        let cfg = EvolutionConfig::for_spec(&spec, 0.2, 1e-12);
        let ev = match evolve(&DensityMatrix::phi_plus(), &spec, 5.0, &cfg) {
            Err(Error::NotConverged { evolution, .. }) => *evolution,
            other => panic!("unexpected {other:?}"),
        };
        let mut buf = Vec::new();
        write_trajectory_csv(&ev.trajectory, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), ev.trajectory.len() + 1);
        for line in &lines {
            assert_eq!(line.split(',').count(), 1 + 32 + 2);
        }
        assert!(lines[0].starts_with("t,re_00,im_00,re_01"));
    }
}
