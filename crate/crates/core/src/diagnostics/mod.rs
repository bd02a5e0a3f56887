//! Moment formulas, ordering probabilities and Monte Carlo error harnesses.

mod lemma;
mod moments;
mod order;
mod report;

pub use lemma::{lemma1_prob, lemma1_prob_fixed, lemma1_prob_mc, McEstimate, LEMMA_ABS_TOL};
pub use moments::{chebyshev_bound_nigp, chebyshev_bound_pdp, nigp_moments, pdp_moments, MomentPair};
pub use order::{empirical_order_prob, OrderEstimate};
pub use report::{cdf_paths, error_report, ErrorReport, PathCdf, Summary};

use crate::measures::MeasureError;
use crate::special::SpecialError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiagnosticsError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error("numeric failure: {0}")]
    Numeric(#[from] SpecialError),
}

impl DiagnosticsError {
    /// True for bad input, false for failures during computation.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            DiagnosticsError::InvalidParameter(_)
                | DiagnosticsError::Measure(MeasureError::InvalidParameter(_))
                | DiagnosticsError::Measure(MeasureError::BoundaryProcess(..))
        )
    }
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T, DiagnosticsError> {
    Err(DiagnosticsError::InvalidParameter(msg.into()))
}

pub(crate) fn check_probability(h: f64, what: &str) -> Result<(), DiagnosticsError> {
    if (0.0..=1.0).contains(&h) {
        Ok(())
    } else {
        invalid(format!("{what} must lie in [0,1], got {h}"))
    }
}
