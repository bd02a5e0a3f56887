//! Special functions, quantile solvers and primitive random variates.
//!
//! Everything here is either deterministic or a pure function of an explicit
//! [`RngStream`](crate::RngStream); nothing holds shared state.

mod beta;
mod gamma;
mod inverse_gaussian;
mod normal;
pub mod quadrature;
mod roots;
mod variates;

pub(crate) use variates::beta_unchecked;

pub use beta::{beta_cdf, ln_beta};
pub use gamma::{
    gamma_ln_quantile, gamma_p, gamma_q, gamma_quantile, ln_gamma, upper_incomplete_gamma,
    upper_incomplete_gamma_scaled, xi,
};
pub use inverse_gaussian::IgParams;
pub use normal::{normal_cdf, normal_sf};
pub use variates::{
    beta_sample, gamma_arrivals, half_stable_sample, ig_sample, ln_gamma_sample,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },
    #[error("{0} is not representable as a positive f64")]
    Underflow(&'static str),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T, SpecialError> {
    Err(SpecialError::Domain(msg.into()))
}
