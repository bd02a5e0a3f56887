//! Inverse-Gaussian law in the `(delta, gamma)` parametrization:
//! density `delta / sqrt(2 pi) x^(-3/2) exp(-(delta^2/x + gamma^2 x)/2 + delta gamma)`,
//! mean `delta / gamma`. It is closed under convolution in `delta`.

use super::normal::ln_normal_sf;
use super::roots::solve_increasing;
use super::{domain, SpecialError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IgParams {
    delta: f64,
    gamma: f64,
}

fn ln_add_exp(a: f64, b: f64) -> f64 {
    let hi = a.max(b);
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + ((a - hi).exp() + (b - hi).exp()).ln()
}

impl IgParams {
    pub fn new(delta: f64, gamma: f64) -> Result<Self, SpecialError> {
        if !(delta.is_finite() && delta > 0.0) {
            return domain(format!("inverse-Gaussian delta must be positive, got {delta}"));
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return domain(format!("inverse-Gaussian gamma must be positive, got {gamma}"));
        }
        Ok(Self { delta, gamma })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn mean(&self) -> f64 {
        self.delta / self.gamma
    }

    pub fn variance(&self) -> f64 {
        self.delta / self.gamma.powi(3)
    }

    pub fn ln_pdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let (d, g) = (self.delta, self.gamma);
        d.ln() - 0.5 * (2.0 * std::f64::consts::PI).ln() - 1.5 * x.ln() - (d - g * x).powi(2) / (2.0 * x)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        self.ln_pdf(x).exp()
    }

    // The two normal-tail terms: ln Phi((g x - d)/sqrt x) written as an upper
    // tail, and 2 d g + ln Phi(-(g x + d)/sqrt x).
    fn ln_terms(&self, x: f64) -> (f64, f64) {
        let (d, g) = (self.delta, self.gamma);
        let s = x.sqrt();
        let z1 = (g * x - d) / s;
        let z2 = (g * x + d) / s;
        (z1, 2.0 * d * g + ln_normal_sf(z2))
    }

    /// `ln P(X <= x)`.
    pub fn ln_cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return f64::NEG_INFINITY;
        }
        let (z1, ln_second) = self.ln_terms(x);
        if z1 <= 0.0 {
            ln_add_exp(ln_normal_sf(-z1), ln_second)
        } else {
            (-self.ln_sf(x).exp()).ln_1p()
        }
    }

    /// `ln P(X > x)`.
    pub fn ln_sf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let (z1, ln_second) = self.ln_terms(x);
        if z1 > 0.0 {
            let first = ln_normal_sf(z1);
            first + (-(ln_second - first).exp_m1()).ln()
        } else {
            (-self.ln_cdf(x).exp()).ln_1p()
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        self.ln_cdf(x).exp()
    }

    pub fn sf(&self, x: f64) -> f64 {
        self.ln_sf(x).exp()
    }

    /// Quantile at lower-tail probability `p` with complement `q = 1 - p`;
    /// the smaller of the two drives the solve.
    pub fn quantile_pair(&self, p: f64, q: f64) -> Result<f64, SpecialError> {
        if !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) {
            return domain(format!("quantile probabilities must lie in (0,1), got p={p}, q={q}"));
        }
        let lower = p <= q;
        let target = if lower { p.ln() } else { q.ln() };
        let t = solve_increasing(
            |t| {
                let x = t.exp();
                let ln_tail = if lower { self.ln_cdf(x) } else { self.ln_sf(x) };
                let h = if lower { ln_tail - target } else { target - ln_tail };
                (h, (t + self.ln_pdf(x) - ln_tail).exp())
            },
            self.mean().ln(),
            "inverse-Gaussian quantile",
        )?;
        let x = t.exp();
        if !(x > 0.0 && x.is_finite()) {
            return Err(SpecialError::Underflow("inverse-Gaussian quantile"));
        }
        Ok(x)
    }

    /// Quantile at probability `p`.
    pub fn quantile(&self, p: f64) -> Result<f64, SpecialError> {
        self.quantile_pair(p, 1.0 - p)
    }
}
