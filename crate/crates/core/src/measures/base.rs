use rand::Rng;
use rand_distr::{Distribution, Exp, Normal, Uniform};
use serde::{Deserialize, Serialize};

use super::{invalid, MeasureError};
use crate::special::normal_cdf;

/// The centering distribution `H` of a random measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BaseMeasure {
    Uniform { a: f64, b: f64 },
    Normal { mu: f64, sigma: f64 },
    Exponential { rate: f64 },
}

impl Default for BaseMeasure {
    fn default() -> Self {
        BaseMeasure::Uniform { a: 0.0, b: 1.0 }
    }
}

impl BaseMeasure {
    pub fn uniform(a: f64, b: f64) -> Result<Self, MeasureError> {
        BaseMeasure::Uniform { a, b }.validated()
    }

    pub fn normal(mu: f64, sigma: f64) -> Result<Self, MeasureError> {
        BaseMeasure::Normal { mu, sigma }.validated()
    }

    pub fn exponential(rate: f64) -> Result<Self, MeasureError> {
        BaseMeasure::Exponential { rate }.validated()
    }

    pub fn validated(self) -> Result<Self, MeasureError> {
        match self {
            BaseMeasure::Uniform { a, b } if !(a.is_finite() && b.is_finite() && a < b) => {
                invalid(format!("uniform base needs finite a < b, got ({a}, {b})"))
            }
            BaseMeasure::Normal { mu, sigma } if !(mu.is_finite() && sigma.is_finite() && sigma > 0.0) => {
                invalid(format!("normal base needs finite mu and sigma > 0, got ({mu}, {sigma})"))
            }
            BaseMeasure::Exponential { rate } if !(rate.is_finite() && rate > 0.0) => {
                invalid(format!("exponential base needs rate > 0, got {rate}"))
            }
            _ => Ok(self),
        }
    }

    /// `H((-inf, x])`.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            BaseMeasure::Uniform { a, b } => ((x - a) / (b - a)).clamp(0.0, 1.0),
            BaseMeasure::Normal { mu, sigma } => normal_cdf((x - mu) / sigma),
            BaseMeasure::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            BaseMeasure::Uniform { a, b } => Uniform::new(a, b).expect("validated").sample(rng),
            BaseMeasure::Normal { mu, sigma } => Normal::new(mu, sigma).expect("validated").sample(rng),
            BaseMeasure::Exponential { rate } => Exp::new(rate).expect("validated").sample(rng),
        }
    }

    pub fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        (0..n).map(|_| self.sample(rng)).collect()
    }
}
