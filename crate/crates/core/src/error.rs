use thiserror::Error;

use crate::dynamics::Evolution;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {asymmetry:.3e})")]
    NotHermitian { asymmetry: f64 },

    #[error("matrix dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid density matrix: {0}")]
    InvalidState(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no sign change of {what} on the bracket [{lo}, {hi}]")]
    NoRoot { what: &'static str, lo: f64, hi: f64 },

    #[error("evolution did not converge by t = {time} (residual {residual:.3e})")]
    NotConverged {
        time: f64,
        residual: f64,
        evolution: Box<Evolution>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
