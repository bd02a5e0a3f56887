use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    dp_new, invalid, nigp_new, nigp_stick, pdp_new, pdp_stick, stable_new, BaseMeasure,
    Degeneracy, DiscreteRandomMeasure, MeasureError, PdpParams, TruncationRule,
};
use crate::special::xi;

/// A constructor together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "process", rename_all = "kebab-case")]
pub enum Process {
    DpNew { n: usize, theta: f64 },
    StableNew { n: usize, alpha: f64 },
    PdpNew { n: usize, m: usize, params: PdpParams },
    PdpStick { rule: TruncationRule, params: PdpParams },
    NigpNew { n: usize, theta: f64 },
    NigpStick { n: usize, theta: f64 },
}

/// One sampled measure, plus the collapse point if the construction
/// degenerated.
#[derive(Debug, Clone, PartialEq)]
pub struct Realization {
    pub measure: DiscreteRandomMeasure,
    pub degeneracy: Option<Degeneracy>,
}

impl Process {
    pub fn name(&self) -> &'static str {
        match self {
            Process::DpNew { .. } => "dp-new",
            Process::StableNew { .. } => "stable-new",
            Process::PdpNew { .. } => "pdp-new",
            Process::PdpStick { .. } => "pdp-stick",
            Process::NigpNew { .. } => "nigp-new",
            Process::NigpStick { .. } => "nigp-stick",
        }
    }

    /// Checks parameters without drawing anything.
    pub fn validate(&self) -> Result<(), MeasureError> {
        let positive_theta = |theta: f64| {
            if theta.is_finite() && theta > 0.0 {
                Ok(())
            } else {
                invalid(format!("theta must be positive and finite, got {theta}"))
            }
        };
        let at_least_one = |n: usize, what: &str| {
            if n >= 1 {
                Ok(())
            } else {
                invalid(format!("{what} must be at least 1"))
            }
        };
        match *self {
            Process::DpNew { n, theta } | Process::NigpNew { n, theta } | Process::NigpStick { n, theta } => {
                at_least_one(n, "n")?;
                positive_theta(theta)
            }
            Process::StableNew { n, alpha } => {
                at_least_one(n, "n")?;
                if alpha > 0.0 && alpha < 1.0 {
                    Ok(())
                } else {
                    invalid(format!("alpha must lie in (0,1), got {alpha}"))
                }
            }
            Process::PdpNew { n, m, params } => {
                at_least_one(n, "n")?;
                at_least_one(m, "m")?;
                PdpParams::new(params.alpha(), params.theta())?;
                if params.alpha() == 0.0 {
                    return invalid("pdp-new needs alpha in (0,1); use dp-new for alpha = 0");
                }
                if params.theta() <= 0.0 {
                    return invalid("pdp-new needs theta > 0; use stable-new for theta = 0 or pdp-stick otherwise");
                }
                Ok(())
            }
            Process::PdpStick { rule, params } => {
                rule.validated()?;
                PdpParams::new(params.alpha(), params.theta()).map(|_| ())
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, base: &BaseMeasure, rng: &mut R) -> Result<Realization, MeasureError> {
        let plain = |measure| Realization { measure, degeneracy: None };
        Ok(match *self {
            Process::DpNew { n, theta } => plain(dp_new(n, theta, base, rng)?),
            Process::StableNew { n, alpha } => plain(stable_new(n, alpha, base, rng)?),
            Process::PdpNew { n, m, params } => plain(pdp_new(n, m, params, base, rng)?),
            Process::PdpStick { rule, params } => plain(pdp_stick(rule, params, base, rng)?),
            Process::NigpNew { n, theta } => plain(nigp_new(n, theta, base, rng)?),
            Process::NigpStick { n, theta } => {
                let d = nigp_stick(n, theta, base, rng)?;
                Realization { measure: d.measure, degeneracy: d.degeneracy }
            }
        })
    }

    /// Number of weights every realization has, when that is fixed.
    pub fn len(&self) -> Option<usize> {
        match *self {
            Process::DpNew { n, .. }
            | Process::StableNew { n, .. }
            | Process::NigpNew { n, .. }
            | Process::NigpStick { n, .. } => Some(n),
            Process::PdpNew { n, m, .. } => Some(n * m),
            Process::PdpStick { rule: TruncationRule::FixedN(n), .. } => Some(n),
            Process::PdpStick { .. } => None,
        }
    }

    /// Whether weights come out in decreasing order by construction.
    pub fn is_monotone(&self) -> bool {
        !matches!(self, Process::PdpStick { .. } | Process::NigpStick { .. })
    }

    /// Variance of `P(A)` under the untruncated process when `H(A) = h`.
    pub fn exact_variance(&self, h: f64) -> Result<f64, MeasureError> {
        if !(0.0..=1.0).contains(&h) {
            return invalid(format!("H(A) must lie in [0,1], got {h}"));
        }
        let spread = h * (1.0 - h);
        Ok(match *self {
            Process::DpNew { theta, .. } => spread / (1.0 + theta),
            Process::StableNew { alpha, .. } => spread * (1.0 - alpha),
            Process::PdpNew { params, .. } | Process::PdpStick { params, .. } => {
                spread * (1.0 - params.alpha()) / (1.0 + params.theta())
            }
            Process::NigpNew { theta, .. } | Process::NigpStick { theta, .. } => spread / xi(theta)?,
        })
    }
}
