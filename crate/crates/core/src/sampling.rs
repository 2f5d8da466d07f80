//! Random states and unitaries for property checks and randomised initial
//! conditions. All generators take the caller's RNG so runs are reproducible.

use rand::Rng;

use crate::dynamics::kappa0_of;
use crate::error::{domain, Result};
use crate::qmat::{hermitian_eigensystem, CMatrix, DensityMatrix, C64};
use crate::resources::XState;

/// Random valid X state: populations uniform on the simplex, coherences a
/// uniform fraction of their positivity bound.
pub fn random_xstate<R: Rng + ?Sized>(rng: &mut R) -> XState {
    let w: Vec<f64> = (0..4).map(|_| -rng.gen_range(f64::EPSILON..1.0).ln()).collect();
    let total: f64 = w.iter().sum();
    let p: Vec<f64> = w.iter().map(|v| v / total).collect();
    let s14 = rng.gen_range(-1.0..1.0) * (p[0] * p[3]).sqrt();
    let s23 = rng.gen_range(-1.0..1.0) * (p[1] * p[2]).sqrt();
    // renormalise exactly so the trace check sees 1 to within round-off
    let (s11, s22, s33) = (p[0], p[1], p[2]);
    let s44 = 1.0 - s11 - s22 - s33;
    XState {
        s11,
        s22,
        s33,
        s44,
        s14,
        s23,
    }
}

/// Random full-rank state `G G† / Tr(G G†)` with complex entries of `G`
/// uniform in the unit square.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let g = CMatrix::from_fn(4, 4, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    let m = &g * &g.dagger();
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr).hermitian_part()).expect("G G† is a valid state")
}

/// Random Hermitian `n × n` matrix with entries in the unit square.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let g = CMatrix::from_fn(n, n, |_, _| {
        C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    g.hermitian_part()
}

/// Random unitary `exp(i H)` for a random Hermitian `H`.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix {
    let h = random_hermitian(rng, n).scale_real(std::f64::consts::PI);
    let e = hermitian_eigensystem(&h).expect("hermitian by construction");
    CMatrix::from_fn(n, n, |i, j| {
        (0..n)
            .map(|k| e.vectors[(i, k)] * e.vectors[(j, k)].conj() * C64::from_polar(1.0, e.values[k]))
            .sum()
    })
}

/// Mixes `rho` with the singlet (κ₀ = −3) or `|Φ+>` (κ₀ = 1) so that the
/// result has the requested `κ₀`.
pub fn with_kappa0(rho: &DensityMatrix, target: f64) -> Result<DensityMatrix> {
    if !(-3.0..=1.0).contains(&target) {
        return Err(domain(format!("target kappa0 = {target} must lie in [-3, 1]")));
    }
    let current = kappa0_of(rho);
    if (current - target).abs() < 1e-15 {
        return Ok(rho.clone());
    }
    let (anchor, anchor_kappa) = if target < current {
        (DensityMatrix::singlet(), -3.0)
    } else {
        (DensityMatrix::phi_plus(), 1.0)
    };
    let p = (target - current) / (anchor_kappa - current);
    Ok(rho.mix(&anchor, p))
}
