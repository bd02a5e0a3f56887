//! Finite approximations of discrete random probability measures.
//!
//! Four processes are covered: the Dirichlet process, the stable-law
//! process, the two-parameter Poisson-Dirichlet (Pitman-Yor) process and the
//! normalized inverse-Gaussian process. Each can be sampled through a
//! monotone-weight construction built from quantiles of gamma arrival ratios,
//! and (for the latter two) through a truncated stick-breaking construction.
//! The [`diagnostics`] module holds the moment formulas, ordering
//! probabilities and Monte Carlo error harnesses used to compare them.

pub mod cli;
pub mod diagnostics;
pub mod measures;
pub mod rng;
pub mod special;

pub use measures::{BaseMeasure, DiscreteRandomMeasure, PdpParams, Process, TruncationRule};
pub use rng::RngStream;
