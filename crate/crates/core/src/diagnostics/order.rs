use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{invalid, DiagnosticsError};
use crate::measures::{BaseMeasure, MeasureError, Process};
use crate::RngStream;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrderEstimate {
    pub prob: f64,
    pub reps: usize,
    /// Realizations flagged as degenerate; they are still counted, with
    /// their post-collapse weights equal to zero.
    pub degenerate_paths: usize,
}

/// Fraction of `reps` realizations with `p_{i+1} < p_i` in generation
/// order (`i` is 1-based). Rep `r` uses stream `first_stream + r`.
pub fn empirical_order_prob(
    process: &Process,
    i: usize,
    reps: usize,
    base: &BaseMeasure,
    seed: u64,
    first_stream: u64,
) -> Result<OrderEstimate, DiagnosticsError> {
    process.validate()?;
    if reps == 0 {
        return invalid("reps must be at least 1");
    }
    if i == 0 {
        return invalid("index i must be at least 1");
    }
    if let Some(len) = process.len() {
        if i + 1 > len {
            return invalid(format!("index {i} needs at least {} weights but the truncation has {len}", i + 1));
        }
    }
    let outcomes = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = RngStream::new(seed, first_stream + r);
            let real = process.sample(base, &mut rng)?;
            let w = real.measure.weights();
            if w.len() < i + 1 {
                return Err(DiagnosticsError::Measure(MeasureError::InvalidParameter(format!(
                    "realization has {} weights, index {i} needs {}",
                    w.len(),
                    i + 1
                ))));
            }
            Ok((w[i] < w[i - 1], real.degeneracy.is_some()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let hits = outcomes.iter().filter(|o| o.0).count();
    Ok(OrderEstimate {
        prob: hits as f64 / reps as f64,
        reps,
        degenerate_paths: outcomes.iter().filter(|o| o.1).count(),
    })
}
