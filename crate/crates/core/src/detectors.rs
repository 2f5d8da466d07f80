//! Equilibrium states of two detectors sharing a thermal scalar-field bath.
//!
//! For a common bath the asymptotic state depends only on the Kossakowski
//! ratio `Ω = Ω₋/Ω₊ ∈ [0, 1]` and on the conserved quantity
//! `κ₀ = Σ_i Tr[ρ σ_i⊗σ_i] ∈ [−3, 1]` of the initial state. With the
//! polarisation axis `r = (0, 0, 1)` the Bloch data are
//!
//! ```text
//! s_j  = −Ω (κ₀ + 3) r_j / (3 + Ω²)
//! s_ij = [Ω² (κ₀ + 3) r_i r_j + (κ₀ − Ω²) δ_ij] / (3 + Ω²)
//! ```
//!
//! and the three baths differ only in how `Ω` is obtained.

use crate::error::{domain, Result};
use crate::hawking::{hawking_theta, HawkingEnv};
use crate::qmat::{kron, pauli, CMatrix, DensityMatrix};
use crate::resources::{bures_entanglement, xstate_concurrence, ResourceReport, XState};

pub const KAPPA0_MIN: f64 = -3.0;
pub const KAPPA0_MAX: f64 = 1.0;

/// How the Hartle–Hawking ratio is built from `ϑ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OmegaConvention {
    /// `Ω = tanh ϑ`.
    TanhTheta,
    /// `Ω = (e^ϑ − 1)/(e^ϑ + 1) = tanh(ϑ/2)`.
    HalfTheta,
}

impl OmegaConvention {
    pub fn label(self) -> &'static str {
        match self {
            OmegaConvention::TanhTheta => "tanh",
            OmegaConvention::HalfTheta => "half",
        }
    }
}

/// The field state seen by the detectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bath {
    /// Uniformly accelerated detectors in the Minkowski vacuum.
    Unruh { t_unruh: f64, epsilon: f64 },
    /// Static detectors in the Boulware vacuum.
    Boulware,
    /// Static detectors in the Hartle–Hawking vacuum.
    HartleHawking {
        omega: f64,
        t_hawking: f64,
        r0: f64,
        convention: OmegaConvention,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DetectorEnv {
    pub bath: Bath,
    pub kappa0: f64,
}

impl DetectorEnv {
    pub fn new(bath: Bath, kappa0: f64) -> Result<Self> {
        check_kappa0(kappa0)?;
        Ok(Self { bath, kappa0 })
    }

    pub fn omega(&self) -> Result<f64> {
        match self.bath {
            Bath::Unruh { t_unruh, epsilon } => omega_unruh(t_unruh, epsilon),
            Bath::Boulware => Ok(omega_boulware()),
            Bath::HartleHawking {
                omega,
                t_hawking,
                r0,
                convention,
            } => omega_hh(omega, t_hawking, r0, convention),
        }
    }

    pub fn equilibrium(&self) -> Result<XState> {
        equilibrium_state(self.omega()?, self.kappa0)
    }

    pub fn resources(&self) -> Result<ResourceReport> {
        detector_resources_closed(self.omega()?, self.kappa0)
    }
}

fn check_kappa0(kappa0: f64) -> Result<()> {
    if !(KAPPA0_MIN..=KAPPA0_MAX).contains(&kappa0) {
        return Err(domain(format!("kappa0 = {kappa0} must lie in [-3, 1]")));
    }
    Ok(())
}

fn check_omega_ratio(omega: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&omega) {
        return Err(domain(format!("Omega = {omega} must lie in [0, 1]")));
    }
    Ok(())
}

/// `Ω = tanh(ε / 2T_U)`.
pub fn omega_unruh(t_unruh: f64, epsilon: f64) -> Result<f64> {
    if !(t_unruh > 0.0) {
        return Err(domain(format!("t_unruh = {t_unruh} must be positive")));
    }
    if !(epsilon > 0.0) {
        return Err(domain(format!("epsilon = {epsilon} must be positive")));
    }
    Ok((epsilon / (2.0 * t_unruh)).tanh())
}

/// The Boulware vacuum has no thermal excitation: `Ω = 1`.
pub fn omega_boulware() -> f64 {
    1.0
}

/// Hartle–Hawking ratio from the redshifted frequency parameter `ϑ`.
pub fn omega_hh(omega: f64, t_hawking: f64, r0: f64, convention: OmegaConvention) -> Result<f64> {
    let theta = hawking_theta(&HawkingEnv::new(omega, t_hawking, r0)?)?;
    Ok(match convention {
        OmegaConvention::TanhTheta => theta.tanh(),
        OmegaConvention::HalfTheta => (0.5 * theta).tanh(),
    })
}

/// Equilibrium density matrix for an arbitrary unit polarisation axis `r`,
/// assembled from its Bloch expansion.
pub fn equilibrium_density(omega: f64, kappa0: f64, r: [f64; 3]) -> Result<DensityMatrix> {
    check_omega_ratio(omega)?;
    check_kappa0(kappa0)?;
    let norm = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(domain(format!("polarisation axis has norm {norm}, expected 1")));
    }
    let den = 3.0 + omega * omega;
    let mut m = kron(&pauli(0), &pauli(0));
    for j in 0..3 {
        let s_j = -omega * (kappa0 + 3.0) * r[j] / den;
        let pi_j = &kron(&pauli(j + 1), &pauli(0)) + &kron(&pauli(0), &pauli(j + 1));
        m = &m + &pi_j.scale_real(s_j);
        for i in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            let s_ij = (omega * omega * (kappa0 + 3.0) * r[i] * r[j] + (kappa0 - omega * omega) * delta) / den;
            m = &m + &kron(&pauli(i + 1), &pauli(j + 1)).scale_real(s_ij);
        }
    }
    let m: CMatrix = m.scale_real(0.25);
    DensityMatrix::new(m)
}

/// Equilibrium X state for `r = (0, 0, 1)`.
pub fn equilibrium_state(omega: f64, kappa0: f64) -> Result<XState> {
    let rho = equilibrium_density(omega, kappa0, [0.0, 0.0, 1.0])?;
    XState::from_density(&rho, 1e-12)
}

/// `|(κ₀ + 3)/(Ω² + 3) − 1|`, shared by the coherence and the discord.
pub fn detector_coherence(omega: f64, kappa0: f64) -> f64 {
    ((kappa0 + 3.0) / (omega * omega + 3.0) - 1.0).abs()
}

/// Resources of the equilibrium state.
pub fn detector_resources_closed(omega: f64, kappa0: f64) -> Result<ResourceReport> {
    let x = equilibrium_state(omega, kappa0)?;
    let coherence = detector_coherence(omega, kappa0);
    let concurrence = xstate_concurrence(&x);
    Ok(ResourceReport {
        coherence,
        discord: coherence,
        concurrence,
        bures: bures_entanglement(concurrence)?,
    })
}

/// The equilibrium state is entangled iff `κ₀ < (5Ω² − 3)/(3 − Ω²)`.
pub fn entanglement_threshold_kappa(omega: f64) -> Result<f64> {
    check_omega_ratio(omega)?;
    let w2 = omega * omega;
    Ok((5.0 * w2 - 3.0) / (3.0 - w2))
}

/// Unruh temperature at which the coherence vanishes (`Ω² = κ₀`), for
/// `κ₀ ∈ (0, 1)`. `None` when the coherence never vanishes at finite,
/// non-zero temperature.
pub fn unruh_critical_temperature(kappa0: f64, epsilon: f64) -> Option<f64> {
    if kappa0 > 0.0 && kappa0 < 1.0 && epsilon > 0.0 {
        Some(epsilon / (2.0 * kappa0.sqrt().atanh()))
    } else {
        None
    }
}
