//! Random probability measure constructors.
//!
//! The monotone constructors ([`dp_new`], [`stable_new`], [`pdp_new`],
//! [`nigp_new`]) turn ratios of gamma arrival times into weights through a
//! decreasing tail-quantile map, so their weights come out already ordered.
//! The stick-breaking constructors ([`pdp_stick`], [`nigp_stick`]) break a
//! unit stick sequentially and return weights in generation order.

mod base;
mod measure;
mod monotone;
mod params;
mod process;
mod stick;

pub use base::BaseMeasure;
pub use measure::DiscreteRandomMeasure;
pub(crate) use measure::check_grid;
pub use monotone::{
    dp_new, dp_weights, nigp_new, nigp_weights, pdp_new, stable_new, stable_weights,
};
pub use params::{PdpParams, StickState, TruncationRule, DEFAULT_EPSILON_CAP};
pub use process::{Process, Realization};
pub use stick::{
    nigp_stick, pdp_stick, stick_weights_from_fractions, Degeneracy, DegeneracyCause,
    NigpStickDraw, DELTA_LIMIT, FRACTION_ONE_TOLERANCE,
};

use crate::special::SpecialError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("numeric failure: {0}")]
    Numeric(#[from] SpecialError),
    #[error("epsilon truncation did not stop within the cap of {len} terms")]
    TruncationOverflow { len: usize },
    #[error("{0}; use {1} for this boundary case")]
    BoundaryProcess(String, &'static str),
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T, MeasureError> {
    Err(MeasureError::InvalidParameter(msg.into()))
}
