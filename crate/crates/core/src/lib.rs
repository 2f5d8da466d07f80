//! Distance-based quantum resources (coherence, discord, entanglement) of
//! two-qubit states in relativistic settings.
//!
//! - [`qmat`]: 2×2 / 4×4 complex linear algebra and the [`DensityMatrix`] carrier.
//! - [`resources`]: closed-form quantifiers on X states plus independent oracles.
//! - [`hawking`]: Gisin state across a Schwarzschild horizon.
//! - [`detectors`]: equilibrium of two detectors in Unruh, Boulware and
//!   Hartle–Hawking baths.
//! - [`dynamics`]: Kossakowski–Lindblad generator and RK4 integrator.

// `!(x > 0.0)` also rejects NaN, which is the point of every such check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod detectors;
pub mod dynamics;
pub mod error;
pub mod hawking;
pub mod optim;
pub mod qmat;
pub mod resources;
pub mod sampling;

pub use error::{Error, Result};
pub use qmat::{CMatrix, DensityMatrix, C64};
pub use resources::{ResourceReport, XState};
