use serde::{Deserialize, Serialize};

use super::{check_probability, invalid, DiagnosticsError};
use crate::measures::PdpParams;
use crate::special::xi;

/// Mean and variance of `P(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentPair {
    pub mean: f64,
    pub variance: f64,
}

/// `E P(A) = H(A)`, `Var P(A) = H(A)(1 - H(A))(1 - alpha)/(1 + theta)`.
pub fn pdp_moments(params: PdpParams, h_a: f64) -> Result<MomentPair, DiagnosticsError> {
    check_probability(h_a, "H(A)")?;
    Ok(MomentPair {
        mean: h_a,
        variance: h_a * (1.0 - h_a) * (1.0 - params.alpha()) / (1.0 + params.theta()),
    })
}

/// `E P(A) = H(A)`, `Var P(A) = H(A)(1 - H(A)) / xi(theta)`.
pub fn nigp_moments(theta: f64, h_a: f64) -> Result<MomentPair, DiagnosticsError> {
    check_probability(h_a, "H(A)")?;
    let xi = xi(theta)?;
    Ok(MomentPair { mean: h_a, variance: h_a * (1.0 - h_a) / xi })
}

fn chebyshev(variance: f64, eps: f64) -> Result<f64, DiagnosticsError> {
    if !(eps.is_finite() && eps > 0.0) {
        return invalid(format!("epsilon must be positive, got {eps}"));
    }
    Ok((variance / (eps * eps)).min(1.0))
}

/// Chebyshev bound on `P(|P(A) - H(A)| > eps)`, capped at 1.
pub fn chebyshev_bound_pdp(params: PdpParams, h_a: f64, eps: f64) -> Result<f64, DiagnosticsError> {
    chebyshev(pdp_moments(params, h_a)?.variance, eps)
}

/// Chebyshev bound on `P(|P(A) - H(A)| > eps)`, capped at 1.
pub fn chebyshev_bound_nigp(theta: f64, h_a: f64, eps: f64) -> Result<f64, DiagnosticsError> {
    chebyshev(nigp_moments(theta, h_a)?.variance, eps)
}
