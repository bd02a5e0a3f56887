//! Monotone-weight constructions.
//!
//! With arrivals `Gamma_1 < ... < Gamma_{n+1}`, the ratio `y_i = Gamma_i /
//! Gamma_{n+1}` increases in `i`, and the weight is the upper-tail quantile
//! of the per-atom jump law at `y_i`, so weights decrease by construction.

use rand::Rng;

use super::measure::{normalize, DiscreteRandomMeasure};
use super::{invalid, BaseMeasure, MeasureError, PdpParams};
use crate::special::{gamma_arrivals, gamma_ln_quantile, IgParams};

fn check_n(n: usize) -> Result<(), MeasureError> {
    if n == 0 {
        return invalid("truncation level n must be at least 1");
    }
    Ok(())
}

fn check_theta(theta: f64) -> Result<(), MeasureError> {
    if !(theta.is_finite() && theta > 0.0) {
        return invalid(format!("theta must be positive and finite, got {theta}"));
    }
    Ok(())
}

fn check_stable_alpha(alpha: f64) -> Result<(), MeasureError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return invalid(format!("alpha must lie in (0,1), got {alpha}"));
    }
    Ok(())
}

fn check_arrivals(arrivals: &[f64], needed: usize) -> Result<(), MeasureError> {
    if arrivals.len() != needed {
        return invalid(format!("expected {needed} arrival times, got {}", arrivals.len()));
    }
    if !(arrivals[0] > 0.0 && arrivals.windows(2).all(|w| w[0] < w[1]))
        || !arrivals[needed - 1].is_finite()
    {
        return invalid("arrival times must be positive, finite and strictly increasing");
    }
    Ok(())
}

/// Lower- and upper-tail probabilities `(1 - y_i, y_i)` for `i = 1..n`,
/// formed without cancellation.
fn tail_pairs(arrivals: &[f64]) -> impl Iterator<Item = (f64, f64)> + '_ {
    let (&last, head) = arrivals.split_last().expect("checked non-empty");
    head.iter().map(move |&g| ((last - g) / last, g / last))
}

fn exp_relative(mut logs: Vec<f64>) -> Vec<f64> {
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    logs.iter_mut().for_each(|l| *l = (*l - top).exp());
    normalize(&mut logs);
    logs
}

/// Normalized Dirichlet-process weights from `n + 1` arrival times.
///
/// Weight `i` is proportional to the Gamma(`theta / n`, 1) quantile at
/// `1 - Gamma_i / Gamma_{n+1}`. Quantiles are kept on the log scale, so at
/// very small shapes tail weights can underflow to zero relative to the
/// largest one.
pub fn dp_weights(theta: f64, arrivals: &[f64]) -> Result<Vec<f64>, MeasureError> {
    check_theta(theta)?;
    check_n(arrivals.len().saturating_sub(1))?;
    check_arrivals(arrivals, arrivals.len())?;
    let shape = theta / (arrivals.len() - 1) as f64;
    let logs = tail_pairs(arrivals)
        .map(|(p, q)| gamma_ln_quantile(shape, p, q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(exp_relative(logs))
}

/// Normalized stable-process weights `Gamma_i^(-1/alpha)` from `n` arrival
/// times.
pub fn stable_weights(alpha: f64, arrivals: &[f64]) -> Result<Vec<f64>, MeasureError> {
    check_stable_alpha(alpha)?;
    check_n(arrivals.len())?;
    check_arrivals(arrivals, arrivals.len())?;
    Ok(exp_relative(arrivals.iter().map(|g| -g.ln() / alpha).collect()))
}

/// Normalized inverse-Gaussian process weights from `n + 1` arrival times:
/// weight `i` is proportional to the IG(`theta / n`, 1) quantile at
/// `1 - Gamma_i / Gamma_{n+1}`.
pub fn nigp_weights(theta: f64, arrivals: &[f64]) -> Result<Vec<f64>, MeasureError> {
    check_theta(theta)?;
    check_n(arrivals.len().saturating_sub(1))?;
    check_arrivals(arrivals, arrivals.len())?;
    let ig = IgParams::new(theta / (arrivals.len() - 1) as f64, 1.0)?;
    let mut w = tail_pairs(arrivals)
        .map(|(p, q)| ig.quantile_pair(p, q))
        .collect::<Result<Vec<_>, _>>()?;
    normalize(&mut w);
    Ok(w)
}

fn with_atoms<R: Rng + ?Sized>(weights: Vec<f64>, base: &BaseMeasure, rng: &mut R) -> DiscreteRandomMeasure {
    let atoms = base.sample_n(weights.len(), rng);
    DiscreteRandomMeasure::from_parts(atoms, weights)
}

/// Dirichlet process with concentration `theta`, truncated at `n` atoms.
pub fn dp_new<R: Rng + ?Sized>(
    n: usize,
    theta: f64,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<DiscreteRandomMeasure, MeasureError> {
    check_n(n)?;
    check_theta(theta)?;
    let w = dp_weights(theta, &gamma_arrivals(n + 1, rng))?;
    Ok(with_atoms(w, base, rng))
}

/// Stable-law process with index `alpha`, truncated at `n` atoms.
pub fn stable_new<R: Rng + ?Sized>(
    n: usize,
    alpha: f64,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<DiscreteRandomMeasure, MeasureError> {
    check_n(n)?;
    check_stable_alpha(alpha)?;
    let w = stable_weights(alpha, &gamma_arrivals(n, rng))?;
    Ok(with_atoms(w, base, rng))
}

/// Two-parameter Poisson-Dirichlet process as the product of a
/// Dirichlet(`theta`) weight vector of length `n` with `n` independent
/// stable(`alpha`) weight vectors of length `m`. Returns all `n * m`
/// products sorted in decreasing order.
///
/// Needs `alpha > 0` and `theta > 0`; the boundary cases are [`dp_new`] and
/// [`stable_new`].
pub fn pdp_new<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    params: PdpParams,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<DiscreteRandomMeasure, MeasureError> {
    check_n(n)?;
    if m == 0 {
        return invalid("m must be at least 1");
    }
    if params.alpha() == 0.0 {
        return Err(MeasureError::BoundaryProcess(
            "alpha = 0 is the Dirichlet process".into(),
            "dp_new",
        ));
    }
    if params.theta() <= 0.0 {
        return Err(MeasureError::BoundaryProcess(
            format!("the product construction needs theta > 0, got {}", params.theta()),
            if params.theta() == 0.0 { "stable_new" } else { "pdp_stick" },
        ));
    }
    let outer = dp_weights(params.theta(), &gamma_arrivals(n + 1, rng))?;
    let mut w = Vec::with_capacity(n * m);
    for &p in &outer {
        let inner = stable_weights(params.alpha(), &gamma_arrivals(m, rng))?;
        w.extend(inner.iter().map(|q| p * q));
    }
    w.sort_unstable_by(|a, b| b.total_cmp(a));
    normalize(&mut w);
    Ok(with_atoms(w, base, rng))
}

/// Normalized inverse-Gaussian process with total mass `theta`, truncated at
/// `n` atoms.
pub fn nigp_new<R: Rng + ?Sized>(
    n: usize,
    theta: f64,
    base: &BaseMeasure,
    rng: &mut R,
) -> Result<DiscreteRandomMeasure, MeasureError> {
    check_n(n)?;
    check_theta(theta)?;
    let w = nigp_weights(theta, &gamma_arrivals(n + 1, rng))?;
    Ok(with_atoms(w, base, rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RngStream;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn dp_injected_shape_one() {
        let w = dp_weights(3.0, &[0.5, 1.0, 1.5, 2.0]).unwrap();
        let raw = [4f64.ln(), 2f64.ln(), (4.0f64 / 3.0).ln()];
        let s: f64 = raw.iter().sum();
        let want: Vec<f64> = raw.iter().map(|r| r / s).collect();
        assert!(close(&w, &want, 1e-12), "{w:?}");
        assert!(close(&w, &[0.585645, 0.292823, 0.121532], 1e-6));
    }

    #[test]
    fn stable_injected() {
        let w = stable_weights(0.5, &[1.0, 2.0, 3.0]).unwrap();
        assert!(close(&w, &[0.73469, 0.18367, 0.08163], 1e-5), "{w:?}");
    }

    #[test]
    fn single_atom() {
        let h = BaseMeasure::default();
        let mut rng = RngStream::new(1, 0);
        assert_eq!(dp_new(1, 2.0, &h, &mut rng).unwrap().weights(), &[1.0]);
        assert_eq!(stable_new(1, 0.3, &h, &mut rng).unwrap().weights(), &[1.0]);
        assert_eq!(nigp_new(1, 2.0, &h, &mut rng).unwrap().weights(), &[1.0]);
        let p = PdpParams::new(0.5, 1.0).unwrap();
        assert_eq!(pdp_new(1, 1, p, &h, &mut rng).unwrap().weights(), &[1.0]);
    }

    #[test]
    fn pdp_boundaries_dispatch() {
        let h = BaseMeasure::default();
        let mut rng = RngStream::new(1, 0);
        let e = pdp_new(2, 2, PdpParams::new(0.0, 1.0).unwrap(), &h, &mut rng).unwrap_err();
        assert!(matches!(e, MeasureError::BoundaryProcess(_, "dp_new")));
        let e = pdp_new(2, 2, PdpParams::new(0.5, 0.0).unwrap(), &h, &mut rng).unwrap_err();
        assert!(matches!(e, MeasureError::BoundaryProcess(_, "stable_new")));
    }

    #[test]
    fn weights_decrease_and_sum_to_one() {
        let h = BaseMeasure::default();
        for seed in 0..20 {
            let mut rng = RngStream::new(seed, 0);
            for m in [
                dp_new(100, 10.0, &h, &mut rng).unwrap(),
                stable_new(100, 0.5, &h, &mut rng).unwrap(),
                nigp_new(100, 1.0, &h, &mut rng).unwrap(),
            ] {
                assert!(m.weights().windows(2).all(|w| w[0] > w[1]));
                assert!((m.total_mass() - 1.0).abs() <= 1e-12);
            }
            let m = pdp_new(20, 30, PdpParams::new(0.5, 10.0).unwrap(), &h, &mut rng).unwrap();
            assert_eq!(m.len(), 600);
            assert!(m.weights().windows(2).all(|w| w[0] >= w[1]));
            assert!((m.total_mass() - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn rejects_bad_arrivals() {
        assert!(dp_weights(1.0, &[1.0]).is_err());
        assert!(dp_weights(1.0, &[2.0, 1.0]).is_err());
        assert!(stable_weights(1.0, &[1.0]).is_err());
        assert!(nigp_weights(0.0, &[1.0, 2.0]).is_err());
    }
}
