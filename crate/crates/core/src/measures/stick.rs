//! Truncated stick-breaking constructions. Weights stay in generation order.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::measure::{normalize, DiscreteRandomMeasure};
use super::{invalid, BaseMeasure, MeasureError, PdpParams, StickState, TruncationRule};
use crate::special::{half_stable_sample, ig_sample, IgParams};
use crate::special::beta_unchecked;

/// `1 - V` below this counts as `V == 1`.
pub const FRACTION_ONE_TOLERANCE: f64 = f64::EPSILON;
/// Inverse-Gaussian `delta` above this counts as overflowed.
pub const DELTA_LIMIT: f64 = 1e300;

/// Stick weights from given fractions; the last fraction is replaced by 1.
pub fn stick_weights_from_fractions(fractions: &[f64]) -> Result<Vec<f64>, MeasureError> {
    if fractions.is_empty() {
        return invalid("need at least one fraction");
    }
    if fractions.iter().any(|f| !(*f > 0.0 && *f <= 1.0)) {
        return invalid("stick fractions must lie in (0,1]");
    }
    let mut s = StickState::with_capacity(fractions.len());
    for &f in &fractions[..fractions.len() - 1] {
        s.push(f, 1.0 - f);
    }
    s.close();
    Ok(s.into_weights())
}

/// Two-parameter Poisson-Dirichlet process by stick-breaking with
/// `beta_i ~ Beta(1 - alpha, theta + i alpha)`.
pub fn pdp_stick<R: Rng + ?Sized>(
    rule: TruncationRule,
    params: PdpParams,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<DiscreteRandomMeasure, MeasureError> {
    let rule = rule.validated()?;
    let (a, theta, alpha) = (1.0 - params.alpha(), params.theta(), params.alpha());
    let fraction = |i: usize, rng: &mut R| beta_unchecked(a, theta + i as f64 * alpha, rng);
    let mut s;
    match rule {
        TruncationRule::FixedN(n) => {
            s = StickState::with_capacity(n);
            for i in 1..n {
                let b = fraction(i, rng);
                s.push(b, 1.0 - b);
            }
            s.close();
        }
        TruncationRule::Epsilon { eps, cap } => {
            s = StickState::new();
            loop {
                if s.len() == cap {
                    return Err(MeasureError::TruncationOverflow { len: cap });
                }
                let b = fraction(s.len() + 1, rng);
                if b * s.residual() < eps {
                    s.close();
                    break;
                }
                s.push(b, 1.0 - b);
            }
        }
    }
    let mut w = s.into_weights();
    normalize(&mut w);
    let atoms = base.sample_n(w.len(), rng);
    Ok(DiscreteRandomMeasure::from_parts(atoms, w))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegeneracyCause {
    /// `1 - V_i` fell below machine epsilon.
    FractionOne,
    /// The inverse-Gaussian parameter `theta / sqrt(residual)` exceeded
    /// [`DELTA_LIMIT`] or stopped being finite.
    DeltaOverflow,
}

/// Where a stick-breaking path collapsed. `index` is 1-based: the weight at
/// that position received the whole remaining stick and every later weight
/// is zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub index: usize,
    pub cause: DegeneracyCause,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NigpStickDraw {
    pub measure: DiscreteRandomMeasure,
    pub degeneracy: Option<Degeneracy>,
}

/// Normalized inverse-Gaussian process by stick-breaking with
/// `V_i = X_i / (X_i + Z_i)`, `X_i ~ IG(theta / sqrt(prod_{j<i} (1 - V_j)), 1)`
/// and `Z_i` positive 1/2-stable.
///
/// Collapse is not an error: the stick is closed at the first degenerate
/// index, the result still has `n` atoms, and the cause is reported.
pub fn nigp_stick<R: Rng + ?Sized>(
    n: usize,
    theta: f64,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<NigpStickDraw, MeasureError> {
    if n == 0 {
        return invalid("truncation level n must be at least 1");
    }
    if !(theta.is_finite() && theta > 0.0) {
        return invalid(format!("theta must be positive and finite, got {theta}"));
    }
    let mut s = StickState::with_capacity(n);
    let mut degeneracy = None;
    for i in 1..n {
        let delta = theta / s.residual().sqrt();
        if !(delta <= DELTA_LIMIT) {
            degeneracy = Some(Degeneracy { index: i, cause: DegeneracyCause::DeltaOverflow });
            break;
        }
        let x = ig_sample(&IgParams::new(delta, 1.0)?, rng);
        let z = half_stable_sample(rng);
        let complement = z / (x + z);
        if complement < FRACTION_ONE_TOLERANCE {
            degeneracy = Some(Degeneracy { index: i, cause: DegeneracyCause::FractionOne });
            break;
        }
        s.push(x / (x + z), complement);
    }
    s.close();
    let mut w = s.into_weights();
    w.resize(n, 0.0);
    normalize(&mut w);
    let atoms = base.sample_n(n, rng);
    Ok(NigpStickDraw { measure: DiscreteRandomMeasure::from_parts(atoms, w), degeneracy })
}
