//! Reference computations used only by tests. Nothing here calls into the
//! library's special functions: integrals use adaptive Simpson, inverses use
//! plain bisection.

fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let diff = left + right - whole;
    if depth == 0 || diff.abs() <= 15.0 * tol {
        return left + right + diff / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson on a finite interval with a smooth integrand.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    // start from a handful of panels so narrow features are not missed
    let panels = 64;
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|k| {
            let lo = a + k as f64 * h;
            let hi = lo + h;
            let (fa, fm, fb) = (f(lo), f(0.5 * (lo + hi)), f(hi));
            let whole = h / 6.0 * (fa + 4.0 * fm + fb);
            simpson_step(&f, lo, hi, fa, fm, fb, whole, tol / panels as f64, 40)
        })
        .sum()
}

/// `int_a^inf f` via `t = a + s / (1 - s)`.
pub fn tail<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64) -> f64 {
    simpson(
        |s: f64| {
            if s >= 1.0 {
                return 0.0;
            }
            let t = a + s / (1.0 - s);
            let v = f(t) / ((1.0 - s) * (1.0 - s));
            if v.is_finite() { v } else { 0.0 }
        },
        0.0,
        1.0,
        tol,
    )
}

/// Smallest x in [lo, hi] with `g(x) >= target` for nondecreasing `g`.
pub fn bisect<G: Fn(f64) -> f64>(g: G, target: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if g(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Bisection on `ln x`, for quantiles spanning many decades.
pub fn bisect_log<G: Fn(f64) -> f64>(g: G, target: f64, lo: f64, hi: f64) -> f64 {
    bisect(|t: f64| g(t.exp()), target, lo.ln(), hi.ln()).exp()
}

/// `Gamma(-2, x) = int_x^inf t^-3 e^-t dt`.
pub fn upper_gamma_minus_two(x: f64) -> f64 {
    // scale by e^x so the integrand is O(1) at the lower limit
    tail(|t: f64| t.powi(-3) * (x - t).exp(), x, 1e-15) * (-x).exp()
}

/// `Gamma(a + 1) = int_0^inf t^a e^-t dt`.
pub fn gamma_fn_plus_one(a: f64) -> f64 {
    tail(|t: f64| t.powf(a) * (-t).exp(), 0.0, 1e-14)
}

/// Regularized lower incomplete gamma by quadrature; `t = u^(1/a)` removes
/// the endpoint singularity.
pub fn gamma_p(a: f64, x: f64) -> f64 {
    let top = x.powf(a);
    simpson(|u: f64| (-u.powf(1.0 / a)).exp(), 0.0, top, 1e-15) / gamma_fn_plus_one(a)
}

/// Normalizing constant of the Beta(a, b) density, `B(a, b)`, with `a < 2`.
pub fn beta_fn(a: f64, b: f64) -> f64 {
    beta_partial(a, b, 1.0)
}

pub fn beta_partial(a: f64, b: f64, x: f64) -> f64 {
    beta_partial_tol(a, b, x, 1e-15)
}

/// `int_0^x t^(a-1)(1-t)^(b-1) dt` with `t = u^(1/a)`.
pub fn beta_partial_tol(a: f64, b: f64, x: f64, tol: f64) -> f64 {
    simpson(|u: f64| (1.0 - u.powf(1.0 / a)).powf(b - 1.0) / a, 0.0, x.powf(a), tol)
}

/// Regularized incomplete beta by quadrature (requires `b >= 1`).
pub fn beta_cdf(a: f64, b: f64, x: f64) -> f64 {
    beta_partial(a, b, x) / beta_fn(a, b)
}

/// Inverse-Gaussian (delta, gamma) density.
pub fn ig_pdf(delta: f64, gamma: f64, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    delta / (2.0 * std::f64::consts::PI).sqrt()
        * x.powf(-1.5)
        * (-(delta - gamma * x).powi(2) / (2.0 * x)).exp()
}

/// Inverse-Gaussian CDF by quadrature of the density in `s = ln t`.
pub fn ig_cdf(delta: f64, gamma: f64, x: f64) -> f64 {
    let hi = x.ln();
    simpson(|s: f64| ig_pdf(delta, gamma, s.exp()) * s.exp(), hi - 60.0, hi, 1e-15)
}

/// Standard normal CDF via `1/2 + int_0^z phi`.
pub fn normal_cdf(z: f64) -> f64 {
    let phi = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    0.5 + simpson(phi, 0.0, z, 1e-15)
}
