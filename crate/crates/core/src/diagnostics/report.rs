//! Monte Carlo comparison of sampled CDF paths against exact moments.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{invalid, DiagnosticsError};
use crate::measures::{BaseMeasure, Degeneracy, Process};
use crate::RngStream;

/// One realization evaluated on the grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathCdf {
    pub values: Vec<f64>,
    pub degeneracy: Option<Degeneracy>,
}

/// Samples `paths` realizations, path `j` on stream `first_stream + j`, and
/// evaluates each CDF on `grid`. Runs on the current rayon pool; the result
/// does not depend on its size.
pub fn cdf_paths(
    process: &Process,
    paths: usize,
    grid: &[f64],
    base: &BaseMeasure,
    seed: u64,
    first_stream: u64,
) -> Result<Vec<PathCdf>, DiagnosticsError> {
    process.validate()?;
    let base = base.validated()?;
    crate::measures::check_grid(grid)?;
    (0..paths as u64)
        .into_par_iter()
        .map(|j| {
            let mut rng = RngStream::new(seed, first_stream + j);
            let r = process.sample(&base, &mut rng)?;
            Ok(PathCdf { values: r.measure.evaluate_cdf(grid)?, degeneracy: r.degeneracy })
        })
        .collect()
}

/// The four numbers a method comparison reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_mean_error: Option<f64>,
    pub max_sd_error: Option<f64>,
    pub paths: usize,
    pub degenerate_paths: usize,
}

/// Empirical mean and standard deviation of `P((-inf, x])` over sampled
/// paths, against the exact process moments.
///
/// Degenerate paths are left out of the averages and counted. With fewer
/// than two usable paths the empirical columns are empty and the maxima are
/// `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub process: Process,
    pub base: BaseMeasure,
    pub seed: u64,
    pub first_stream: u64,
    pub grid: Vec<f64>,
    pub empirical_mean: Vec<f64>,
    pub empirical_sd: Vec<f64>,
    pub true_mean: Vec<f64>,
    pub true_sd: Vec<f64>,
    pub max_mean_error: Option<f64>,
    pub max_sd_error: Option<f64>,
    pub paths: usize,
    pub used_paths: usize,
    pub degenerate_paths: usize,
}

impl ErrorReport {
    pub fn from_paths(
        process: Process,
        base: BaseMeasure,
        seed: u64,
        first_stream: u64,
        grid: Vec<f64>,
        cdfs: &[PathCdf],
    ) -> Result<Self, DiagnosticsError> {
        let true_mean: Vec<f64> = grid.iter().map(|&x| base.cdf(x)).collect();
        let true_sd = true_mean
            .iter()
            .map(|&h| process.exact_variance(h).map(f64::sqrt))
            .collect::<Result<Vec<_>, _>>()?;
        let used: Vec<&[f64]> = cdfs
            .iter()
            .filter(|p| p.degeneracy.is_none())
            .map(|p| p.values.as_slice())
            .collect();
        let (mut empirical_mean, mut empirical_sd) = (Vec::new(), Vec::new());
        let (mut max_mean_error, mut max_sd_error) = (None, None);
        if used.len() >= 2 {
            let count = used.len() as f64;
            for k in 0..grid.len() {
                let mean = used.iter().map(|v| v[k]).sum::<f64>() / count;
                let ss = used.iter().map(|v| (v[k] - mean).powi(2)).sum::<f64>();
                empirical_mean.push(mean);
                empirical_sd.push((ss / (count - 1.0)).sqrt());
            }
            let max_gap = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
            max_mean_error = Some(max_gap(&empirical_mean, &true_mean));
            max_sd_error = Some(max_gap(&empirical_sd, &true_sd));
        }
        Ok(Self {
            process,
            base,
            seed,
            first_stream,
            grid,
            empirical_mean,
            empirical_sd,
            true_mean,
            true_sd,
            max_mean_error,
            max_sd_error,
            paths: cdfs.len(),
            used_paths: used.len(),
            degenerate_paths: cdfs.len() - used.len(),
        })
    }

    pub fn summary(&self) -> Summary {
        Summary {
            max_mean_error: self.max_mean_error,
            max_sd_error: self.max_sd_error,
            paths: self.paths,
            degenerate_paths: self.degenerate_paths,
        }
    }
}

/// Samples `paths` realizations and summarizes them as an [`ErrorReport`].
pub fn error_report(
    process: &Process,
    paths: usize,
    grid: &[f64],
    base: &BaseMeasure,
    seed: u64,
    first_stream: u64,
) -> Result<ErrorReport, DiagnosticsError> {
    if paths < 2 {
        return invalid(format!("an error report needs at least 2 paths, got {paths}"));
    }
    let cdfs = cdf_paths(process, paths, grid, base, seed, first_stream)?;
    ErrorReport::from_paths(*process, *base, seed, first_stream, grid.to_vec(), &cdfs)
}
