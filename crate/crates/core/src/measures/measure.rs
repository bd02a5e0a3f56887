use serde::{Deserialize, Serialize};

use super::{invalid, MeasureError};

/// A finite discrete probability measure `sum_i w_i delta_{x_i}` on the line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteRandomMeasure {
    atoms: Vec<f64>,
    weights: Vec<f64>,
}

impl DiscreteRandomMeasure {
    /// Checked constructor: equal lengths, finite atoms, non-negative weights
    /// summing to one within `1e-12`.
    pub fn new(atoms: Vec<f64>, weights: Vec<f64>) -> Result<Self, MeasureError> {
        if atoms.len() != weights.len() {
            return invalid(format!(
                "{} atoms but {} weights",
                atoms.len(),
                weights.len()
            ));
        }
        if atoms.is_empty() {
            return invalid("a measure needs at least one atom");
        }
        if atoms.iter().any(|x| !x.is_finite()) {
            return invalid("atoms must be finite");
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return invalid("weights must be finite and non-negative");
        }
        let total = neumaier_sum(weights.iter().copied());
        if (total - 1.0).abs() > 1e-12 {
            return invalid(format!("weights sum to {total}, not 1"));
        }
        Ok(Self { atoms, weights })
    }

    pub(crate) fn from_parts(atoms: Vec<f64>, weights: Vec<f64>) -> Self {
        debug_assert_eq!(atoms.len(), weights.len());
        Self { atoms, weights }
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        neumaier_sum(self.weights.iter().copied())
    }

    pub fn into_parts(self) -> (Vec<f64>, Vec<f64>) {
        (self.atoms, self.weights)
    }

    /// `F(x) = sum of weights of atoms <= x` at each point of a strictly
    /// increasing grid.
    pub fn evaluate_cdf(&self, grid: &[f64]) -> Result<Vec<f64>, MeasureError> {
        check_grid(grid)?;
        // bins[k] collects atoms in (grid[k-1], grid[k]]; the last bin is
        // everything above the grid and is dropped.
        let mut bins = vec![Neumaier::default(); grid.len() + 1];
        for (&x, &w) in self.atoms.iter().zip(&self.weights) {
            bins[grid.partition_point(|&g| g < x)].add(w);
        }
        let mut acc = Neumaier::default();
        Ok(bins[..grid.len()]
            .iter()
            .map(|b| {
                acc.add(b.sum);
                acc.add(b.compensation);
                acc.value()
            })
            .collect())
    }
}

pub(crate) fn check_grid(grid: &[f64]) -> Result<(), MeasureError> {
    if grid.is_empty() {
        return invalid("grid is empty");
    }
    if grid.iter().any(|g| !g.is_finite()) {
        return invalid("grid points must be finite");
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return invalid("grid must be strictly increasing");
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

pub(crate) fn neumaier_sum(xs: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = Neumaier::default();
    xs.into_iter().for_each(|x| acc.add(x));
    acc.value()
}

/// Divides by the compensated sum in place.
pub(crate) fn normalize(weights: &mut [f64]) {
    let total = neumaier_sum(weights.iter().copied());
    weights.iter_mut().for_each(|w| *w /= total);
}
