//! Standard normal tails, expressed through `Q(1/2, z^2/2)` so they share the
//! incomplete gamma machinery.

use super::gamma::ln_gamma_q;

/// `ln P(Z > z)` for standard normal `Z`, finite far into the upper tail.
pub(crate) fn ln_normal_sf(z: f64) -> f64 {
    if z == f64::INFINITY {
        return f64::NEG_INFINITY;
    }
    let tail = |u: f64| ln_gamma_q(0.5, 0.5 * u * u).expect("half-order gamma tail is well defined");
    if z > 0.0 {
        tail(z) - std::f64::consts::LN_2
    } else {
        (-0.5 * tail(-z).exp()).ln_1p()
    }
}

/// `P(Z > z)`.
pub fn normal_sf(z: f64) -> f64 {
    ln_normal_sf(z).exp()
}

/// `P(Z <= z)`.
pub fn normal_cdf(z: f64) -> f64 {
    normal_sf(-z)
}
