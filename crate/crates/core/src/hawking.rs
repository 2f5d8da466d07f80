//! Gisin state shared between a freely falling and a static observer
//! outside a Schwarzschild black hole.
//!
//! The static observer's qubit is mapped through the single-mode fermionic
//! Hawking transformation: the Hartle–Hawking vacuum `|0>_H` splits into
//! `c |0>_I |0>_II + s |1>_I |1>_II` with `c = (1 + e^{-ϑ})^{-1/2}`,
//! `s = (1 + e^{ϑ})^{-1/2}`, while `|1>_H = |1>_I |0>_II`. Tracing out region
//! II leaves a two-Kraus channel on the second qubit.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{domain, Error, Result};
use crate::qmat::{kron, pauli, CMatrix, DensityMatrix, C64};
use crate::resources::{bures_entanglement, xstate_concurrence, ResourceReport, XState};

/// Hawking temperatures below this are treated as exactly zero (`ϑ = ∞`).
pub const ZERO_TEMPERATURE: f64 = 1e-9;

/// Gisin state `α |φ_φ><φ_φ| + (1 − α)/2 (|00><00| + |11><11|)` with
/// `|φ_φ> = sin φ |01> + cos φ |10>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GisinParams {
    pub alpha: f64,
    pub phi: f64,
}

impl GisinParams {
    pub fn new(alpha: f64, phi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(domain(format!("alpha = {alpha} must lie in [0, 1]")));
        }
        if !(0.0..=FRAC_PI_2 + 1e-12).contains(&phi) {
            return Err(domain(format!("phi = {phi} must lie in [0, pi/2]")));
        }
        Ok(Self { alpha, phi })
    }
}

/// Black-hole environment seen by the static observer.
///
/// Units are `k_B = ħ = c = 1`; `omega` and `t_hawking` share one scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HawkingEnv {
    /// Mode frequency ω.
    pub omega: f64,
    /// Hawking temperature `T_H = 1/(8πM)`.
    pub t_hawking: f64,
    /// Observer distance in Schwarzschild radii, `R₀ = d₀ / 2M`.
    pub r0: f64,
}

impl HawkingEnv {
    pub fn new(omega: f64, t_hawking: f64, r0: f64) -> Result<Self> {
        let env = Self {
            omega,
            t_hawking,
            r0,
        };
        env.validate()?;
        Ok(env)
    }

    /// Environment for a black hole of mass `mass`.
    pub fn from_mass(omega: f64, mass: f64, r0: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(domain(format!("mass = {mass} must be positive")));
        }
        Self::new(omega, 1.0 / (8.0 * PI * mass), r0)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega >= 0.0) || !self.omega.is_finite() {
            return Err(domain(format!("omega = {} must be non-negative", self.omega)));
        }
        if !(self.t_hawking >= 0.0) {
            return Err(domain(format!(
                "t_hawking = {} must be non-negative",
                self.t_hawking
            )));
        }
        if !(self.r0 > 1.0) {
            return Err(domain(format!(
                "r0 must exceed 1 (got {}): the observer must stay outside the horizon",
                self.r0
            )));
        }
        Ok(())
    }

    pub fn theta(&self) -> Result<f64> {
        hawking_theta(self)
    }

    /// Whether `(R₀ − 1) ≤ 1`, the regime where the Rindler approximation
    /// of the near-horizon geometry holds.
    pub fn rindler_valid(&self) -> bool {
        self.r0 - 1.0 <= 1.0
    }
}

/// `ϑ = (ω/T_H) √(1 − 1/R₀)`; infinite at zero temperature.
pub fn hawking_theta(env: &HawkingEnv) -> Result<f64> {
    env.validate()?;
    if env.omega == 0.0 {
        return Ok(0.0);
    }
    if env.t_hawking < ZERO_TEMPERATURE {
        return Ok(f64::INFINITY);
    }
    Ok(env.omega / env.t_hawking * (1.0 - 1.0 / env.r0).sqrt())
}

/// Gisin state read directly off the pure-plus-mixture form.
pub fn gisin_density(p: &GisinParams) -> Result<XState> {
    let p = GisinParams::new(p.alpha, p.phi)?;
    let (s, c) = p.phi.sin_cos();
    XState::new(
        (1.0 - p.alpha) / 2.0,
        p.alpha * s * s,
        p.alpha * c * c,
        (1.0 - p.alpha) / 2.0,
        0.0,
        p.alpha * s * c,
    )
}

/// Gisin state assembled from its Pauli (Bloch) expansion
/// `¼[1⊗1 − α cos2φ (σz⊗1 − 1⊗σz) + α sin2φ (σx⊗σx + σy⊗σy) + (1 − 2α) σz⊗σz]`.
pub fn gisin_density_bloch(p: &GisinParams) -> Result<DensityMatrix> {
    let p = GisinParams::new(p.alpha, p.phi)?;
    let pp = |a: usize, b: usize| kron(&pauli(a), &pauli(b));
    let (sin2, cos2) = (2.0 * p.phi).sin_cos();
    let terms = [
        (1.0, pp(0, 0)),
        (-p.alpha * cos2, &pp(3, 0) - &pp(0, 3)),
        (p.alpha * sin2, &pp(1, 1) + &pp(2, 2)),
        (1.0 - 2.0 * p.alpha, pp(3, 3)),
    ];
    let m = terms
        .iter()
        .fold(CMatrix::zeros(4, 4), |acc, (w, t)| &acc + &t.scale_real(*w));
    DensityMatrix::new(m.scale_real(0.25))
}

/// Branch amplitudes `(c, s)` of the vacuum splitting; `c² + s² = 1`.
pub fn branch_amplitudes(theta: f64) -> (f64, f64) {
    let c = (1.0 + (-theta).exp()).powf(-0.5);
    let s = (1.0 + theta.exp()).powf(-0.5);
    (c, s)
}

/// Kraus operators on the second qubit after tracing out region II.
pub fn hawking_kraus(theta: f64) -> [CMatrix; 2] {
    let (c, s) = branch_amplitudes(theta);
    let k0 = CMatrix::diag(&[c, 1.0]);
    let mut k1 = CMatrix::zeros(2, 2);
    k1[(1, 0)] = C64::new(s, 0.0);
    [k0, k1]
}

/// Applies the Hawking channel to the second qubit of `rho`, giving the
/// state accessible to the free-falling observer and the static observer
/// in region I. `theta = ∞` is the identity.
pub fn hawking_channel_accessible(rho: &DensityMatrix, theta: f64) -> Result<DensityMatrix> {
    if !(theta >= 0.0) {
        return Err(domain(format!("theta = {theta} must be non-negative")));
    }
    if theta == f64::INFINITY {
        return Ok(rho.clone());
    }
    let id = CMatrix::identity(2);
    let out = hawking_kraus(theta)
        .iter()
        .map(|k| {
            let full = kron(&id, k);
            &(&full * rho.matrix()) * &full.dagger()
        })
        .fold(CMatrix::zeros(4, 4), |acc, t| &acc + &t);
    Ok(DensityMatrix::from_matrix_unchecked(out.hermitian_part()))
}

/// `|α sin 2φ| / √(1 + e^{−ϑ})`, shared by the coherence and the discord.
pub fn gisin_hawking_coherence(p: &GisinParams, theta: f64) -> f64 {
    (p.alpha * (2.0 * p.phi).sin()).abs() / (1.0 + (-theta).exp()).sqrt()
}

/// The accessible state as an X state.
pub fn gisin_hawking_state(p: &GisinParams, env: &HawkingEnv) -> Result<XState> {
    let theta = hawking_theta(env)?;
    let rho = gisin_density(p)?.to_density()?;
    XState::from_density(&hawking_channel_accessible(&rho, theta)?, 1e-12)
}

/// Resources of the accessible state. Coherence and discord use the
/// closed form; concurrence is read from the channel output.
pub fn gisin_hawking_resources(p: &GisinParams, env: &HawkingEnv) -> Result<ResourceReport> {
    let theta = hawking_theta(env)?;
    let x = gisin_hawking_state(p, env)?;
    let coherence = gisin_hawking_coherence(p, theta);
    let concurrence = xstate_concurrence(&x);
    Ok(ResourceReport {
        coherence,
        discord: coherence,
        concurrence,
        bures: bures_entanglement(concurrence)?,
    })
}

/// Smallest α at which the accessible state becomes entangled, by bisection
/// on the sign of `concurrence(ρ_AI(α))` using the X-state formula.
pub fn entanglement_threshold_alpha(phi: f64, theta: f64, tol: f64) -> Result<f64> {
    entanglement_threshold_alpha_with(phi, theta, tol, |rho| {
        XState::from_density(rho, 1e-12)
            .map(|x| xstate_concurrence(&x))
            .unwrap_or(f64::NAN)
    })
}

/// Same as [`entanglement_threshold_alpha`] with a caller-supplied
/// concurrence (e.g. [`crate::qmat::wootters_concurrence`]).
pub fn entanglement_threshold_alpha_with<F>(phi: f64, theta: f64, tol: f64, concurrence: F) -> Result<f64>
where
    F: Fn(&DensityMatrix) -> f64,
{
    if !(phi > 0.0 && phi < FRAC_PI_2) {
        return Err(domain(format!("phi = {phi} must lie in (0, pi/2)")));
    }
    if !(tol > 0.0) {
        return Err(domain("tolerance must be positive"));
    }
    let entangled = |alpha: f64| -> Result<bool> {
        let rho = gisin_density(&GisinParams::new(alpha, phi)?)?.to_density()?;
        Ok(concurrence(&hawking_channel_accessible(&rho, theta)?) > 0.0)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    if entangled(lo)? || !entangled(hi)? {
        return Err(Error::NoRoot {
            what: "concurrence",
            lo,
            hi,
        });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if entangled(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
