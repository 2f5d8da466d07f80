//! Distance-based resource quantifiers for two-qubit X states.
//!
//! Closed forms live next to independent checks: the l1 coherence against
//! the entrywise-root Hellinger expression, the X-state concurrence against
//! Wootters' formula (see [`crate::qmat::wootters_concurrence`]), and the
//! trace-distance discord against a direct minimisation over
//! classical-quantum states.

use rand::Rng;

use crate::error::{domain, Error, Result};
use crate::optim::{nelder_mead, NelderMeadOptions};
use crate::qmat::{CMatrix, DensityMatrix, C64, ONE, ZERO};

/// Slack allowed on the X-state normalisation and positivity constraints.
pub const XSTATE_TOL: f64 = 1e-12;

/// Below this magnitude the discord denominator is treated as zero.
const DISCORD_DEGENERATE: f64 = 1e-12;

/// Two-qubit X state in the computational basis `|00>, |01>, |10>, |11>`.
///
/// Only the diagonal and the real anti-diagonal coherences `s14`, `s23` are
/// non-zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XState {
    pub s11: f64,
    pub s22: f64,
    pub s33: f64,
    pub s44: f64,
    pub s14: f64,
    pub s23: f64,
}

impl XState {
    pub fn new(s11: f64, s22: f64, s33: f64, s44: f64, s14: f64, s23: f64) -> Result<Self> {
        let x = Self {
            s11,
            s22,
            s33,
            s44,
            s14,
            s23,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.s11, self.s22, self.s33, self.s44, self.s14, self.s23];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidState("X state has non-finite entries".into()));
        }
        let trace = self.s11 + self.s22 + self.s33 + self.s44;
        if (trace - 1.0).abs() > XSTATE_TOL {
            return Err(Error::InvalidState(format!("X state trace {trace} differs from 1")));
        }
        if [self.s11, self.s22, self.s33, self.s44]
            .iter()
            .any(|&p| p < -XSTATE_TOL)
        {
            return Err(Error::InvalidState("X state has a negative population".into()));
        }
        if self.s14 * self.s14 > self.s11 * self.s44 + XSTATE_TOL {
            return Err(Error::InvalidState("s14^2 exceeds s11*s44".into()));
        }
        if self.s23 * self.s23 > self.s22 * self.s33 + XSTATE_TOL {
            return Err(Error::InvalidState("s23^2 exceeds s22*s33".into()));
        }
        Ok(())
    }

    pub fn maximally_mixed() -> Self {
        Self {
            s11: 0.25,
            s22: 0.25,
            s33: 0.25,
            s44: 0.25,
            s14: 0.0,
            s23: 0.0,
        }
    }

    /// `|Φ+><Φ+|`.
    pub fn phi_plus() -> Self {
        Self {
            s11: 0.5,
            s22: 0.0,
            s33: 0.0,
            s44: 0.5,
            s14: 0.5,
            s23: 0.0,
        }
    }

    /// `|Ψ-><Ψ-|`.
    pub fn singlet() -> Self {
        Self {
            s11: 0.0,
            s22: 0.5,
            s33: 0.5,
            s44: 0.0,
            s14: 0.0,
            s23: -0.5,
        }
    }

    pub fn to_matrix(&self) -> CMatrix {
        let mut m = CMatrix::diag(&[self.s11, self.s22, self.s33, self.s44]);
        m[(0, 3)] = C64::new(self.s14, 0.0);
        m[(3, 0)] = C64::new(self.s14, 0.0);
        m[(1, 2)] = C64::new(self.s23, 0.0);
        m[(2, 1)] = C64::new(self.s23, 0.0);
        m
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.to_matrix())
    }

    /// Reads the X-state entries of `rho`, rejecting matrices with
    /// off-X entries or imaginary coherences larger than `tol`.
    pub fn from_density(rho: &DensityMatrix, tol: f64) -> Result<Self> {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                let on_x = i == j || i + j == 3;
                if !on_x && m[(i, j)].norm() > tol {
                    return Err(Error::InvalidState(format!(
                        "entry ({i},{j}) = {} is outside the X pattern",
                        m[(i, j)]
                    )));
                }
            }
        }
        if m[(0, 3)].im.abs() > tol || m[(1, 2)].im.abs() > tol {
            return Err(Error::InvalidState("X-state coherences must be real".into()));
        }
        Self::new(
            m[(0, 0)].re,
            m[(1, 1)].re,
            m[(2, 2)].re,
            m[(3, 3)].re,
            m[(0, 3)].re,
            m[(1, 2)].re,
        )
    }
}

/// One row of resource values for a single state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResourceReport {
    /// Hellinger-distance coherence `C_H`.
    pub coherence: f64,
    /// Trace-distance discord `D_T`.
    pub discord: f64,
    /// Concurrence.
    pub concurrence: f64,
    /// Normalised Bures-distance entanglement `B_d`.
    pub bures: f64,
}

/// Sum of the moduli of all off-diagonal entries.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let mut total = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                total += m[(i, j)].norm();
            }
        }
    }
    total
}

/// `Tr[(√ρ − √ρ_p)²]` with the entrywise root `√|ρ_kj| e^{i arg ρ_kj}` and
/// `ρ_p` the diagonal part of `ρ`.
pub fn hellinger_coherence_oracle(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let entry_root = |z: C64| {
        let r = z.norm();
        if r == 0.0 {
            ZERO
        } else {
            z / r * r.sqrt()
        }
    };
    let root = CMatrix::from_fn(4, 4, |i, j| entry_root(m[(i, j)]));
    let root_diag = CMatrix::from_fn(4, 4, |i, j| {
        if i == j {
            entry_root(m[(i, i)])
        } else {
            ZERO
        }
    });
    let diff = &root - &root_diag;
    (&diff * &diff).trace().re
}

/// Concurrence of an X state, `2 max{0, |s14| − √(s22 s33), |s23| − √(s11 s44)}`.
pub fn xstate_concurrence(x: &XState) -> f64 {
    let l1 = x.s14.abs() - (x.s22 * x.s33).max(0.0).sqrt();
    let l2 = x.s23.abs() - (x.s11 * x.s44).max(0.0).sqrt();
    (2.0 * l1.max(l2).max(0.0)).min(1.0)
}

/// Normalised Bures-distance entanglement as a function of concurrence.
pub fn bures_entanglement(c: f64) -> Result<f64> {
    if !(-XSTATE_TOL..=1.0 + XSTATE_TOL).contains(&c) {
        return Err(domain(format!("concurrence {c} is outside [0, 1]")));
    }
    let c = c.clamp(0.0, 1.0);
    let norm = (2.0 - std::f64::consts::SQRT_2).sqrt();
    let inner = 2.0 + 2.0 * (1.0 - c * c).sqrt();
    Ok((2.0 - inner.sqrt()).max(0.0).sqrt() / norm)
}

/// Closed-form trace-distance discord of an X state (measurement on qubit 1).
///
/// When the denominator vanishes (for instance `s14 = 0` with
/// `Υ_max = Υ_min`) the value is the algebraic limit `|Υ1|`.
pub fn trace_distance_discord_closed(x: &XState) -> f64 {
    let u1 = 2.0 * (x.s23.abs() + x.s14.abs());
    let u2 = 2.0 * (x.s23.abs() - x.s14.abs());
    let u3 = 1.0 - 2.0 * (x.s22 + x.s33);
    let u30 = 2.0 * (x.s11 + x.s22) - 1.0;
    let (u1s, u2s, u3s) = (u1 * u1, u2 * u2, u3 * u3);
    let min2 = u1s.min(u3s);
    let max2 = u3s.max(u2s + u30 * u30);
    // u1² − u2² taken exactly, so near-equal max2 and min2 do not cancel
    let cross = 16.0 * x.s14.abs() * x.s23.abs();
    let spread = max2 - min2;
    let den = spread + cross;
    if den.abs() < DISCORD_DEGENERATE {
        return u1.abs();
    }
    ((u1s * spread + cross * min2) / den).max(0.0).sqrt()
}

/// Settings for [`trace_distance_discord_oracle`].
#[derive(Clone, Copy, Debug)]
pub struct DiscordOracleOptions {
    /// Number of random starting points (at least 1).
    pub restarts: usize,
    /// Function-value tolerance handed to the simplex search.
    pub tol: f64,
    /// Evaluation budget per local search.
    pub max_evals: usize,
}

impl Default for DiscordOracleOptions {
    fn default() -> Self {
        Self {
            restarts: 32,
            tol: 1e-10,
            max_evals: 3000,
        }
    }
}

type M2 = [[C64; 2]; 2];
type M4 = [[C64; 4]; 4];

/// `(1 + v·σ)/2`, with `v` clamped radially to the unit ball when `clamp` is set.
fn half_bloch(v: [f64; 3], clamp: bool) -> M2 {
    let r = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let k = if clamp && r > 1.0 { 1.0 / r } else { 1.0 };
    let (x, y, z) = (k * v[0], k * v[1], k * v[2]);
    [
        [C64::new(0.5 * (1.0 + z), 0.0), C64::new(0.5 * x, -0.5 * y)],
        [C64::new(0.5 * x, 0.5 * y), C64::new(0.5 * (1.0 - z), 0.0)],
    ]
}

fn cq_array(params: &[f64]) -> M4 {
    assert_eq!(params.len(), 9);
    let (theta, phi) = (params[0], params[1]);
    let p = 0.5 * (1.0 + params[2].sin());
    let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let plus = half_bloch(n, false);
    let minus = half_bloch([-n[0], -n[1], -n[2]], false);
    let b0 = half_bloch([params[3], params[4], params[5]], true);
    let b1 = half_bloch([params[6], params[7], params[8]], true);
    let mut out = [[ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] =
                        plus[i][j] * b0[k][l] * p + minus[i][j] * b1[k][l] * (1.0 - p);
                }
            }
        }
    }
    out
}

/// Sum of |eigenvalues| of a Hermitian 4×4 array, by cyclic Jacobi.
// Rows p and q are rotated together, which an iterator cannot borrow.
#[allow(clippy::needless_range_loop)]
fn hermitian_trace_norm4(mut a: M4) -> f64 {
    let scale: f64 = a.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for _ in 0..50 {
        let off: f64 = (0..4)
            .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * 1e-3 * scale || off == 0.0 {
            break;
        }
        for p in 0..4 {
            for q in (p + 1)..4 {
                let b = a[p][q];
                let abs_b = b.norm();
                if abs_b == 0.0 {
                    continue;
                }
                let ph = (b / abs_b).conj();
                let tau = (a[q][q].re - a[p][p].re) / (2.0 * abs_b);
                let t = if tau.is_finite() {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                } else {
                    0.0
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = x * c - y * ph * s;
                    row[q] = x * s + y * ph * c;
                }
                let phc = ph.conj();
                for k in 0..4 {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = x * c - y * phc * s;
                    a[q][k] = x * s + y * phc * c;
                }
                a[p][q] = ZERO;
                a[q][p] = ZERO;
            }
        }
    }
    (0..4).map(|i| a[i][i].re.abs()).sum()
}

/// The classical-quantum state `p P+ ⊗ ρ(b0) + (1 − p) P− ⊗ ρ(b1)` encoded
/// by nine unconstrained parameters: projector direction `(θ, ϕ)`, weight
/// `p = (1 + sin u)/2` and two Bloch vectors clamped to the unit ball.
pub fn classical_quantum_state(params: &[f64]) -> CMatrix {
    let a = cq_array(params);
    CMatrix::from_fn(4, 4, |i, j| a[i][j])
}

/// Trace-distance discord by direct search over classical-quantum states,
/// `min ‖ρ − Σ‖₁` on the same scale as [`trace_distance_discord_closed`]
/// (1 for a Bell state).
///
/// Every candidate is a genuine classical-quantum state, so the result is an
/// upper bound on the true minimum that tightens as `restarts` grows.
pub fn trace_distance_discord_oracle<R: Rng + ?Sized>(
    rho: &DensityMatrix,
    opts: &DiscordOracleOptions,
    rng: &mut R,
) -> f64 {
    assert!(opts.restarts >= 1, "restarts must be at least 1");
    let m = rho.matrix();
    let mut target = [[ZERO; 4]; 4];
    for (i, row) in target.iter_mut().enumerate() {
        for (j, z) in row.iter_mut().enumerate() {
            *z = m[(i, j)];
        }
    }
    let objective = |x: &[f64]| {
        let mut d = cq_array(x);
        for i in 0..4 {
            for j in 0..4 {
                d[i][j] = target[i][j] - d[i][j];
            }
        }
        hermitian_trace_norm4(d)
    };
    let mut best = f64::INFINITY;
    for _ in 0..opts.restarts {
        let mut x0 = vec![
            rng.gen_range(0.0..std::f64::consts::PI),
            rng.gen_range(0.0..2.0 * std::f64::consts::PI),
            rng.gen_range(-1.5..1.5),
        ];
        x0.extend((0..6).map(|_| rng.gen_range(-1.0..1.0)));
        let mut x = x0;
        let mut value = f64::INFINITY;
        for step in [0.5, 0.1, 0.02] {
            let local = nelder_mead(
                objective,
                &x,
                &NelderMeadOptions {
                    initial_step: step,
                    f_tol: opts.tol,
                    x_tol: opts.tol,
                    max_evals: opts.max_evals,
                },
            );
            x = local.x;
            value = local.value;
        }
        best = best.min(value);
    }
    best
}

/// All four quantifiers from the X-state closed forms.
pub fn resource_report(x: &XState) -> Result<ResourceReport> {
    x.validate()?;
    let concurrence = xstate_concurrence(x);
    Ok(ResourceReport {
        coherence: 2.0 * (x.s14.abs() + x.s23.abs()),
        discord: trace_distance_discord_closed(x),
        concurrence,
        bures: bures_entanglement(concurrence)?,
    })
}

/// Resource values for an arbitrary two-qubit state: l1 coherence of the
/// matrix, Wootters concurrence, and the closed-form discord of its X part.
/// Intended for states that are X-shaped up to round-off (e.g. evolved states).
pub fn resource_report_general(rho: &DensityMatrix, x_tol: f64) -> Result<ResourceReport> {
    let x = XState::from_density(rho, x_tol)?;
    let concurrence = crate::qmat::wootters_concurrence(rho);
    Ok(ResourceReport {
        coherence: l1_coherence(rho),
        discord: trace_distance_discord_closed(&x),
        concurrence,
        bures: bures_entanglement(concurrence)?,
    })
}

/// `|ψ><ψ|` for the real amplitudes `psi`, handy for building test states.
pub fn real_pure_state(psi: [f64; 4]) -> DensityMatrix {
    DensityMatrix::pure(psi.map(|a| ONE * a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn xstate_validation_rejects_bad_input() {
        assert!(XState::new(0.5, 0.5, 0.0, 0.1, 0.0, 0.0).is_err());
        assert!(XState::new(1.1, -0.1, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(XState::new(0.25, 0.25, 0.25, 0.25, 0.3, 0.0).is_err());
        assert!(XState::new(0.25, 0.25, 0.25, 0.25, 0.0, -0.3).is_err());
        assert!(XState::new(0.25, 0.25, 0.25, 0.25, 0.25, -0.25).is_ok());
    }

    #[test]
    fn from_density_rejects_non_x() {
        let plus = real_pure_state([1.0, 1.0, 0.0, 0.0]);
        assert!(XState::from_density(&plus, 1e-12).is_err());
        let back = XState::from_density(&XState::singlet().to_density().unwrap(), 1e-12).unwrap();
        assert_eq!(back, XState::singlet());
    }

    #[test]
    fn l1_coherence_cases() {
        let diag = DensityMatrix::new(CMatrix::diag(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        assert_eq!(l1_coherence(&diag), 0.0);
        assert!(close(l1_coherence(&DensityMatrix::phi_plus()), 1.0, 1e-15));
        let x = XState::new(0.3, 0.25, 0.25, 0.2, 0.1, 0.2).unwrap();
        assert!(close(l1_coherence(&x.to_density().unwrap()), 0.6, 1e-15));
    }

    #[test]
    fn hellinger_oracle_cases() {
        let diag = DensityMatrix::new(CMatrix::diag(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        assert!(close(hellinger_coherence_oracle(&diag), 0.0, 1e-15));
        assert!(close(hellinger_coherence_oracle(&DensityMatrix::phi_plus()), 1.0, 1e-14));
    }

    #[test]
    fn hellinger_oracle_handles_complex_phases() {
        let psi = [ONE, C64::new(0.3, 0.4), C64::new(0.0, -0.5), C64::new(-0.2, 0.1)];
        let rho = DensityMatrix::pure(psi);
        assert!(close(hellinger_coherence_oracle(&rho), l1_coherence(&rho), 1e-12));
    }

    #[test]
    fn xstate_concurrence_reference_states() {
        assert!(close(xstate_concurrence(&XState::phi_plus()), 1.0, 1e-15));
        assert!(close(xstate_concurrence(&XState::singlet()), 1.0, 1e-15));
        assert_eq!(xstate_concurrence(&XState::maximally_mixed()), 0.0);
    }

    #[test]
    fn bures_values() {
        assert_eq!(bures_entanglement(0.0).unwrap(), 0.0);
        assert!(close(bures_entanglement(1.0).unwrap(), 1.0, 1e-15));
        // sqrt(2 - sqrt(2 + 2 sqrt(1 - 0.225^2))) / sqrt(2 - sqrt 2)
        let expected = (2.0_f64 - (2.0_f64 + 2.0 * (1.0_f64 - 0.050625).sqrt()).sqrt()).sqrt()
            / (2.0_f64 - 2.0_f64.sqrt()).sqrt();
        let b = bures_entanglement(0.225).unwrap();
        assert!(close(b, expected, 1e-15));
        assert!(close(b, 0.1482, 5e-5), "{b}");
        assert!(bures_entanglement(1.1).is_err());
        assert!(bures_entanglement(-0.01).is_err());
    }

    #[test]
    fn discord_closed_reference_states() {
        let cq = XState::new(0.1, 0.2, 0.3, 0.4, 0.0, 0.0).unwrap();
        assert_eq!(trace_distance_discord_closed(&cq), 0.0);
        assert!(close(trace_distance_discord_closed(&XState::phi_plus()), 1.0, 1e-15));
        assert!(close(trace_distance_discord_closed(&XState::singlet()), 1.0, 1e-15));
    }

    #[test]
    fn discord_degenerate_limit_is_two_s23() {
        let x = XState::new(0.125, 0.5, 0.25, 0.125, 0.0, 0.3).unwrap();
        assert!(close(trace_distance_discord_closed(&x), 0.6, 1e-15));
    }

    #[test]
    fn discord_oracle_diagonal_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rho = DensityMatrix::new(CMatrix::diag(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        let opts = DiscordOracleOptions {
            restarts: 4,
            ..Default::default()
        };
        assert!(trace_distance_discord_oracle(&rho, &opts, &mut rng) < 1e-6);
    }

    #[test]
    fn discord_oracle_bell_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let opts = DiscordOracleOptions {
            restarts: 32,
            ..Default::default()
        };
        let d = trace_distance_discord_oracle(&DensityMatrix::phi_plus(), &opts, &mut rng);
        assert!((1.0 - 1e-9..=1.0 + 1e-3).contains(&d), "{d}");
    }

    #[test]
    fn classical_quantum_parametrisation_is_a_state() {
        let s = classical_quantum_state(&[0.3, 1.2, 0.4, 2.0, -1.0, 0.5, 0.1, 0.2, -0.3]);
        let rho = DensityMatrix::new(s).unwrap();
        assert!(rho.min_eigenvalue() >= -1e-14);
    }

    #[test]
    fn classical_quantum_matches_kron_construction() {
        use crate::qmat::{kron, pauli};
        let x: [f64; 9] = [0.3, 1.2, 0.4, 0.2, -0.4, 0.5, 1.1, 0.2, -0.3];
        let bloch = |v: &[f64]| {
            let r = v.iter().map(|c| c * c).sum::<f64>().sqrt().max(1.0);
            (1..=3).fold(CMatrix::identity(2), |acc, k| &acc + &pauli(k).scale_real(v[k - 1] / r))
        };
        let n = [x[0].sin() * x[1].cos(), x[0].sin() * x[1].sin(), x[0].cos()];
        let p = 0.5 * (1.0 + x[2].sin());
        let plus = bloch(&n);
        let minus = bloch(&n.map(|c| -c));
        let expected = &kron(&plus, &bloch(&x[3..6])).scale_real(0.25 * p)
            + &kron(&minus, &bloch(&x[6..9])).scale_real(0.25 * (1.0 - p));
        assert!(classical_quantum_state(&x).max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn fixed_size_trace_norm_matches_svd() {
        use crate::qmat::trace_norm;
        use crate::sampling::random_hermitian;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let h = random_hermitian(&mut rng, 4);
            let mut a = [[ZERO; 4]; 4];
            for (i, row) in a.iter_mut().enumerate() {
                for (j, z) in row.iter_mut().enumerate() {
                    *z = h[(i, j)];
                }
            }
            assert!(close(hermitian_trace_norm4(a), trace_norm(&h), 1e-12));
        }
    }

    #[test]
    fn report_reference_states() {
        let bell = resource_report(&XState::phi_plus()).unwrap();
        for v in [bell.coherence, bell.discord, bell.concurrence, bell.bures] {
            assert!(close(v, 1.0, 1e-14));
        }
        let mixed = resource_report(&XState::maximally_mixed()).unwrap();
        assert_eq!(
            mixed,
            ResourceReport {
                coherence: 0.0,
                discord: 0.0,
                concurrence: 0.0,
                bures: 0.0
            }
        );
        let werner = resource_report(&XState::singlet()).unwrap();
        for v in [werner.coherence, werner.discord, werner.concurrence, werner.bures] {
            assert!(close(v, 1.0, 1e-14));
        }
    }
}
