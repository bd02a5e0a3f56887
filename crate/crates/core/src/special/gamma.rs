//! Gamma function family: log-gamma, regularized incomplete gamma, the
//! non-regularized upper incomplete gamma for non-positive integer order,
//! `xi`, and gamma quantiles.

use super::roots::solve_increasing;
use super::{domain, SpecialError};

const MAX_ITER: usize = 2000;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + k as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// `sum_{n>=0} x^n / ((a+1)...(a+n))`, so that `P(a,x) = x^a e^-x / Gamma(a+1) * S`.
fn lower_series(a: f64, x: f64) -> Result<f64, SpecialError> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut ap = a;
    for _ in 0..MAX_ITER {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term.abs() < sum.abs() * f64::EPSILON {
            return Ok(sum);
        }
    }
    Err(SpecialError::NoConvergence { what: "incomplete gamma series", iterations: MAX_ITER })
}

/// Modified Lentz evaluation of the continued fraction
/// `Gamma(a,x) = e^-x x^a / (x+1-a - 1(1-a)/(x+3-a - 2(2-a)/(x+5-a - ...)))`.
/// Returns the denominator, valid for any real `a` and `x > 0`.
fn upper_fraction(a: f64, x: f64) -> Result<f64, SpecialError> {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for n in 1..MAX_ITER {
        let an = -(n as f64) * (n as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < f64::EPSILON {
            return Ok(1.0 / h);
        }
    }
    Err(SpecialError::NoConvergence { what: "incomplete gamma continued fraction", iterations: MAX_ITER })
}

fn check_shape(a: f64) -> Result<(), SpecialError> {
    if !(a.is_finite() && a > 0.0) {
        return domain(format!("gamma shape must be positive and finite, got {a}"));
    }
    Ok(())
}

/// `(ln P(a,x), ln Q(a,x))` for `a > 0`, `x >= 0`, given `ln x` so that
/// arguments far below the smallest positive double stay usable.
fn ln_pq_at(a: f64, ln_x: f64) -> Result<(f64, f64), SpecialError> {
    let x = ln_x.exp();
    if x < a + 1.0 {
        let s = lower_series(a, x)?;
        let ln_p = a * ln_x - x - ln_gamma(a + 1.0) + s.ln();
        let p = ln_p.exp();
        Ok((ln_p, (-p).ln_1p()))
    } else {
        let ln_q = a * ln_x - x - ln_gamma(a) - upper_fraction(a, x)?.ln();
        let q = ln_q.exp();
        Ok(((-q).ln_1p(), ln_q))
    }
}

pub(crate) fn ln_gamma_q(a: f64, x: f64) -> Result<f64, SpecialError> {
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(ln_pq_at(a, x.ln())?.1)
}

fn check_arg(x: f64) -> Result<(), SpecialError> {
    if x.is_nan() || x < 0.0 {
        return domain(format!("incomplete gamma argument must be >= 0, got {x}"));
    }
    Ok(())
}

/// Regularized lower incomplete gamma `P(a, x)`.
pub fn gamma_p(a: f64, x: f64) -> Result<f64, SpecialError> {
    check_shape(a)?;
    check_arg(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == f64::INFINITY {
        return Ok(1.0);
    }
    Ok(ln_pq_at(a, x.ln())?.0.exp())
}

/// Regularized upper incomplete gamma `Q(a, x) = 1 - P(a, x)`.
pub fn gamma_q(a: f64, x: f64) -> Result<f64, SpecialError> {
    check_shape(a)?;
    check_arg(x)?;
    if x == 0.0 {
        return Ok(1.0);
    }
    if x == f64::INFINITY {
        return Ok(0.0);
    }
    Ok(ln_pq_at(a, x.ln())?.1.exp())
}

/// Exponential integral `E1(x)` by its power series, for `0 < x <= 1`.
fn e1_series(x: f64) -> Result<f64, SpecialError> {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..MAX_ITER {
        term *= -x / k as f64;
        let contrib = term / k as f64;
        sum -= contrib;
        if contrib.abs() < f64::EPSILON * sum.abs() {
            return Ok(-EULER_GAMMA - x.ln() + sum);
        }
    }
    Err(SpecialError::NoConvergence { what: "E1 series", iterations: MAX_ITER })
}

/// `e^x Gamma(a, x)`, the scaled upper incomplete gamma.
///
/// Any `a > 0` is supported; `a <= 0` must be an integer (the orders reached
/// from `E1` by the downward recurrence). The scaling keeps the value finite
/// where `Gamma(a, x)` itself underflows.
pub fn upper_incomplete_gamma_scaled(a: f64, x: f64) -> Result<f64, SpecialError> {
    if !x.is_finite() || x <= 0.0 || !a.is_finite() {
        return domain(format!("upper incomplete gamma needs finite a and x > 0, got a={a}, x={x}"));
    }
    if a > 0.0 {
        return Ok((ln_gamma(a) + ln_gamma_q(a, x)? + x).exp());
    }
    if x >= 1.0 {
        return Ok((a * x.ln()).exp() * upper_fraction(a, x)?.recip());
    }
    if a.fract() != 0.0 {
        return domain(format!("order {a} is supported only for x >= 1"));
    }
    // Gamma(k,x) = (Gamma(k+1,x) - x^k e^-x) / k, walking down from Gamma(0,x) = E1(x).
    let mut value = x.exp() * e1_series(x)?;
    let mut k = 0.0;
    while k > a {
        k -= 1.0;
        value = (value - x.powf(k)) / k;
    }
    Ok(value)
}

/// Upper incomplete gamma `Gamma(a, x) = int_x^inf t^(a-1) e^-t dt`.
///
/// Underflows to zero once `x` exceeds roughly 700; use
/// [`upper_incomplete_gamma_scaled`] there.
pub fn upper_incomplete_gamma(a: f64, x: f64) -> Result<f64, SpecialError> {
    Ok(upper_incomplete_gamma_scaled(a, x)? * (-x).exp())
}

/// `xi(theta) = 1 / (theta^2 e^theta Gamma(-2, theta))`, which controls the
/// variance of the normalized inverse-Gaussian process. `xi(theta) ~ theta`
/// as theta grows.
pub fn xi(theta: f64) -> Result<f64, SpecialError> {
    if !(theta.is_finite() && theta > 0.0) {
        return domain(format!("theta must be positive and finite, got {theta}"));
    }
    Ok(1.0 / (theta * theta * upper_incomplete_gamma_scaled(-2.0, theta)?))
}

/// Log of the Gamma(`shape`, 1) quantile at lower-tail probability `p`.
///
/// `p` and `q` must be complementary (`p + q = 1`); pass both so that whichever
/// tail is smaller is used at full relative precision. The log scale keeps the
/// result finite for shapes so small that the quantile itself underflows.
pub fn gamma_ln_quantile(shape: f64, p: f64, q: f64) -> Result<f64, SpecialError> {
    check_shape(shape)?;
    if !(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0) {
        return domain(format!("quantile probabilities must lie in (0,1), got p={p}, q={q}"));
    }
    let ln_gamma_a = ln_gamma(shape);
    let lower = p <= q;
    let target = if lower { p.ln() } else { q.ln() };
    let t0 = if lower {
        // small-x approximation P ~ x^a / Gamma(a+1)
        ((p.ln() + ln_gamma(shape + 1.0)) / shape).min(shape.max(1.0).ln())
    } else {
        (-q.ln()).max(shape).ln()
    };
    let mut failure = None;
    let t = solve_increasing(
        |t| match ln_pq_at(shape, t) {
            Ok((ln_p, ln_q)) => {
                let ln_tail = if lower { ln_p } else { ln_q };
                let h = if lower { ln_tail - target } else { target - ln_tail };
                let ln_density_t = shape * t - t.exp() - ln_gamma_a;
                (h, (ln_density_t - ln_tail).exp())
            }
            Err(e) => {
                failure = Some(e);
                (f64::NAN, f64::NAN)
            }
        },
        t0,
        "gamma quantile",
    );
    match (t, failure) {
        (_, Some(e)) => Err(e),
        (t, None) => t,
    }
}

/// Quantile of Gamma(`shape`, 1) at probability `p`.
///
/// Returns [`SpecialError::Underflow`] when the quantile is below the
/// smallest positive double; see [`gamma_ln_quantile`] for that regime.
pub fn gamma_quantile(shape: f64, p: f64) -> Result<f64, SpecialError> {
    let x = gamma_ln_quantile(shape, p, 1.0 - p)?.exp();
    if x == 0.0 {
        return Err(SpecialError::Underflow("gamma quantile"));
    }
    Ok(x)
}
