//! Primitive random variates driving every process constructor.

use rand::Rng;
use rand_distr::{Distribution, Exp1, Gamma, Open01, StandardNormal};

use super::inverse_gaussian::IgParams;
use super::{domain, SpecialError};

/// Unit-rate Poisson arrival times `Gamma_1 < ... < Gamma_count`.
pub fn gamma_arrivals<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<f64> {
    let mut acc = 0.0;
    (0..count)
        .map(|_| {
            let e: f64 = Exp1.sample(rng);
            acc += e;
            acc
        })
        .collect()
}

/// `ln X` for `X ~ Gamma(shape, 1)`.
///
/// Shapes below one use `X = Y U^(1/shape)` with `Y ~ Gamma(shape + 1)`, kept
/// in logs so tiny shapes never round the variate to zero.
pub fn ln_gamma_sample<R: Rng + ?Sized>(shape: f64, rng: &mut R) -> Result<f64, SpecialError> {
    if !(shape.is_finite() && shape > 0.0) {
        return domain(format!("gamma shape must be positive, got {shape}"));
    }
    Ok(ln_gamma_unchecked(shape, rng))
}

#[inline]
pub(crate) fn ln_gamma_unchecked<R: Rng + ?Sized>(shape: f64, rng: &mut R) -> f64 {
    if shape >= 1.0 {
        let g = Gamma::new(shape, 1.0).expect("validated shape");
        g.sample(rng).ln()
    } else {
        let g = Gamma::new(shape + 1.0, 1.0).expect("validated shape");
        let u: f64 = Open01.sample(rng);
        g.sample(rng).ln() + u.ln() / shape
    }
}

/// Beta(a, b) variate, always strictly inside (0, 1).
pub fn beta_sample<R: Rng + ?Sized>(a: f64, b: f64, rng: &mut R) -> Result<f64, SpecialError> {
    if !(a.is_finite() && a > 0.0 && b.is_finite() && b > 0.0) {
        return domain(format!("beta parameters must be positive, got a={a}, b={b}"));
    }
    Ok(beta_unchecked(a, b, rng))
}

#[inline]
pub(crate) fn beta_unchecked<R: Rng + ?Sized>(a: f64, b: f64, rng: &mut R) -> f64 {
    let ln_x = ln_gamma_unchecked(a, rng);
    let ln_y = ln_gamma_unchecked(b, rng);
    // X / (X + Y) = 1 / (1 + e^(ln Y - ln X))
    let v = (-(ln_y - ln_x).exp().ln_1p()).exp();
    v.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0)
}

/// Positive 1/2-stable variate with density
/// `(2 pi)^(-1/2) x^(-3/2) exp(-1/(2x))`, drawn as `1 / W^2`.
pub fn half_stable_sample<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let w: f64 = StandardNormal.sample(rng);
        let x = 1.0 / (w * w);
        if x.is_finite() {
            return x;
        }
    }
}

/// Inverse-Gaussian variate by the transformation-with-rejection scheme of
/// Michael, Schucany and Haas: a chi-square(1) transform has two preimages,
/// chosen with the probability that makes the result exact.
pub fn ig_sample<R: Rng + ?Sized>(params: &IgParams, rng: &mut R) -> f64 {
    let mean = params.mean();
    let nu: f64 = StandardNormal.sample(rng);
    // phi = mean * nu^2 / shape with shape = delta^2
    let phi = nu * nu / (params.delta() * params.gamma());
    // The two roots are mean / r and mean * r.
    let r = 1.0 + 0.5 * phi + phi.sqrt() * (1.0 + 0.25 * phi).sqrt();
    let u: f64 = rng.random();
    if u * (r + 1.0) <= r {
        mean / r
    } else {
        mean * r
    }
}
