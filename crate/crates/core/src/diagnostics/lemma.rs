//! Probability that consecutive stick-breaking weights are out of order.
//!
//! With `beta_i ~ Beta(1 - alpha, theta + i alpha)` independent,
//! `p'_{i+1} < p'_i` is the event `beta_{i+1} < beta_i / (1 - beta_i)`, so
//! its probability is the expectation over `beta_i = b` of the
//! Beta(1 - alpha, theta + (i+1) alpha) CDF at `min(b / (1 - b), 1)`.

use std::cell::RefCell;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{invalid, DiagnosticsError};
use crate::measures::PdpParams;
use crate::special::quadrature::integrate;
use crate::special::quadrature::integrate_fixed;
use crate::special::{beta_cdf, beta_unchecked, ln_beta, SpecialError};

/// Absolute accuracy targeted by [`lemma1_prob`].
pub const LEMMA_ABS_TOL: f64 = 1e-9;
const MAX_PANELS: usize = 2000;

struct Setup {
    a: f64,
    b_i: f64,
    b_next: f64,
    /// Upper end of the integration variable `u = b^a` (at `b = 1/2`).
    u_max: f64,
    ln_norm: f64,
    /// `P(beta_i >= 1/2)`, where the clipped CDF is identically 1.
    upper_mass: f64,
}

fn setup(i: usize, alpha: f64, theta: f64) -> Result<Setup, DiagnosticsError> {
    if i == 0 {
        return invalid("index i must be at least 1");
    }
    let p = PdpParams::new(alpha, theta)?;
    let a = 1.0 - p.alpha();
    let b_i = p.theta() + i as f64 * p.alpha();
    let b_next = b_i + p.alpha();
    Ok(Setup {
        a,
        b_i,
        b_next,
        u_max: 0.5f64.powf(a),
        ln_norm: -(a.ln() + ln_beta(a, b_i)),
        upper_mass: beta_cdf(b_i, a, 0.5)?,
    })
}

impl Setup {
    /// Integrand after substituting `b = u^(1/a)`, which removes the
    /// `b^(a-1)` singularity of the Beta density at zero.
    fn integrand(&self, u: f64, failure: &RefCell<Option<SpecialError>>) -> f64 {
        let b = u.powf(1.0 / self.a);
        let density = ((self.b_i - 1.0) * (-b).ln_1p() + self.ln_norm).exp();
        match beta_cdf(self.a, self.b_next, b / (1.0 - b)) {
            Ok(c) => density * c,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }
}

/// `P(p'_{i+1} < p'_i)` for Poisson-Dirichlet stick-breaking weights, by
/// adaptive Gauss-Kronrod quadrature.
pub fn lemma1_prob(i: usize, alpha: f64, theta: f64) -> Result<f64, DiagnosticsError> {
    let s = setup(i, alpha, theta)?;
    let failure = RefCell::new(None);
    let est = integrate(|u| s.integrand(u, &failure), 0.0, s.u_max, LEMMA_ABS_TOL, 0.0, MAX_PANELS);
    if let Some(e) = failure.into_inner() {
        return Err(e.into());
    }
    Ok((est?.value + s.upper_mass).clamp(0.0, 1.0))
}

/// Same quantity on a fixed mesh of `panels` equal Gauss-Kronrod panels,
/// for mesh-refinement checks.
pub fn lemma1_prob_fixed(i: usize, alpha: f64, theta: f64, panels: usize) -> Result<f64, DiagnosticsError> {
    if panels == 0 {
        return invalid("panels must be at least 1");
    }
    let s = setup(i, alpha, theta)?;
    let failure = RefCell::new(None);
    let v = integrate_fixed(|u| s.integrand(u, &failure), 0.0, s.u_max, panels);
    if let Some(e) = failure.into_inner() {
        return Err(e.into());
    }
    Ok((v + s.upper_mass).clamp(0.0, 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub prob: f64,
    pub se: f64,
    pub reps: usize,
}

/// Monte Carlo estimate of the same probability from `reps` direct draws
/// of the two Beta fractions.
pub fn lemma1_prob_mc<R: Rng + ?Sized>(
    i: usize,
    alpha: f64,
    theta: f64,
    reps: usize,
    rng: &mut R,
) -> Result<McEstimate, DiagnosticsError> {
    if reps == 0 {
        return invalid("reps must be at least 1");
    }
    let s = setup(i, alpha, theta)?;
    let hits = (0..reps)
        .filter(|_| {
            let b = beta_unchecked(s.a, s.b_i, rng);
            let c = beta_unchecked(s.a, s.b_next, rng);
            c * (1.0 - b) < b
        })
        .count();
    let prob = hits as f64 / reps as f64;
    Ok(McEstimate { prob, se: (prob * (1.0 - prob) / reps as f64).sqrt(), reps })
}
