use serde::{Deserialize, Serialize};

use super::{invalid, MeasureError};

pub const DEFAULT_EPSILON_CAP: usize = 1_000_000;

/// Discount `alpha` and concentration `theta` of the two-parameter
/// Poisson-Dirichlet process.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PdpParams {
    alpha: f64,
    theta: f64,
}

impl PdpParams {
    /// Requires `0 <= alpha < 1` and `theta > -alpha`.
    pub fn new(alpha: f64, theta: f64) -> Result<Self, MeasureError> {
        if !(alpha.is_finite() && (0.0..1.0).contains(&alpha)) {
            return invalid(format!("alpha must lie in [0,1), got {alpha}"));
        }
        if !(theta.is_finite() && theta > -alpha) {
            return invalid(format!("theta must be finite and exceed -alpha = {}, got {theta}", -alpha));
        }
        Ok(Self { alpha, theta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// How many sticks to break.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TruncationRule {
    /// Exactly `n` weights; the last fraction is 1.
    FixedN(usize),
    /// Stop at the first weight below `eps`, which then absorbs the rest of
    /// the stick. More than `cap` weights is an error.
    Epsilon { eps: f64, cap: usize },
}

impl TruncationRule {
    pub fn fixed(n: usize) -> Result<Self, MeasureError> {
        TruncationRule::FixedN(n).validated()
    }

    pub fn epsilon(eps: f64, cap: Option<usize>) -> Result<Self, MeasureError> {
        TruncationRule::Epsilon { eps, cap: cap.unwrap_or(DEFAULT_EPSILON_CAP) }.validated()
    }

    pub fn validated(self) -> Result<Self, MeasureError> {
        match self {
            TruncationRule::FixedN(0) => invalid("truncation level n must be at least 1"),
            TruncationRule::Epsilon { eps, .. } if !(eps > 0.0 && eps < 1.0) => {
                invalid(format!("epsilon must lie in (0,1), got {eps}"))
            }
            TruncationRule::Epsilon { cap: 0, .. } => invalid("epsilon cap must be at least 1"),
            _ => Ok(self),
        }
    }
}

/// Running state of a stick-breaking construction.
#[derive(Debug, Clone, PartialEq)]
pub struct StickState {
    fractions: Vec<f64>,
    weights: Vec<f64>,
    residual: f64,
}

impl Default for StickState {
    fn default() -> Self {
        Self { fractions: Vec::new(), weights: Vec::new(), residual: 1.0 }
    }
}

impl StickState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        Self { fractions: Vec::with_capacity(n), weights: Vec::with_capacity(n), residual: 1.0 }
    }

    /// Breaks off `fraction` of what is left and returns the piece.
    /// `1 - fraction` may be passed separately when it is known more
    /// accurately than by subtraction.
    pub fn push(&mut self, fraction: f64, complement: f64) -> f64 {
        let w = fraction * self.residual;
        self.fractions.push(fraction);
        self.weights.push(w);
        self.residual *= complement;
        w
    }

    /// Gives the whole remaining stick to one more atom.
    pub fn close(&mut self) -> f64 {
        let w = self.residual;
        self.fractions.push(1.0);
        self.weights.push(w);
        self.residual = 0.0;
        w
    }

    pub fn fractions(&self) -> &[f64] {
        &self.fractions
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn into_weights(self) -> Vec<f64> {
        self.weights
    }
}
