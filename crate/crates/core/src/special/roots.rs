//! Bracketed root finding for monotone functions.

use super::SpecialError;

const MAX_EXPANSIONS: usize = 80;
const MAX_ITER: usize = 400;

/// Solve `h(t) = 0` for a nondecreasing `h`. `eval` returns `(h(t), h'(t))`.
///
/// A bracket is grown geometrically from `t0`; inside it, Newton steps are
/// accepted only when they land strictly inside the bracket and the bracket
/// keeps halving, otherwise the step is a bisection.
pub(crate) fn solve_increasing<F>(mut eval: F, t0: f64, what: &'static str) -> Result<f64, SpecialError>
where
    F: FnMut(f64) -> (f64, f64),
{
    let (h0, _) = eval(t0);
    if h0.is_nan() {
        return super::domain(format!("{what}: objective is NaN at the initial point"));
    }
    if h0 == 0.0 {
        return Ok(t0);
    }
    let (mut lo, mut hi);
    let mut step = 1.0;
    if h0 < 0.0 {
        lo = t0;
        hi = t0 + step;
        let mut k = 0;
        loop {
            let (h, _) = eval(hi);
            if h.is_nan() {
                return super::domain(format!("{what}: objective is NaN at {hi}"));
            }
            if h >= 0.0 {
                break;
            }
            lo = hi;
            step *= 2.0;
            hi += step;
            k += 1;
            if k > MAX_EXPANSIONS {
                return Err(SpecialError::NoConvergence { what, iterations: k });
            }
        }
    } else {
        hi = t0;
        lo = t0 - step;
        let mut k = 0;
        loop {
            let (h, _) = eval(lo);
            if h.is_nan() {
                return super::domain(format!("{what}: objective is NaN at {lo}"));
            }
            if h <= 0.0 {
                break;
            }
            hi = lo;
            step *= 2.0;
            lo -= step;
            k += 1;
            if k > MAX_EXPANSIONS {
                return Err(SpecialError::NoConvergence { what, iterations: k });
            }
        }
    }

    let tol = |t: f64| 4.0 * f64::EPSILON * t.abs().max(1.0);
    let mut t = if t0 > lo && t0 < hi { t0 } else { 0.5 * (lo + hi) };
    let mut last_width = hi - lo;
    let mut force_bisect = false;
    for _ in 0..MAX_ITER {
        let (h, dh) = eval(t);
        if h.is_nan() {
            return super::domain(format!("{what}: objective is NaN at {t}"));
        }
        if h == 0.0 {
            return Ok(t);
        }
        if h < 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        if hi - lo <= tol(t) {
            return Ok(0.5 * (lo + hi));
        }
        let newton = t - h / dh;
        let next = if !force_bisect && newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let width = hi - lo;
        force_bisect = width > 0.5 * last_width;
        last_width = width;
        if (next - t).abs() <= tol(t) {
            return Ok(next);
        }
        t = next;
    }
    Err(SpecialError::NoConvergence { what, iterations: MAX_ITER })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cube_root() {
        let t = solve_increasing(|t| (t * t * t - 2.0, 3.0 * t * t), 0.0, "cube").unwrap();
        assert!((t - 2f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn far_root_is_bracketed() {
        let t = solve_increasing(|t| (t + 70_000.0, 1.0), 5.0, "linear").unwrap();
        assert!((t + 70_000.0).abs() < 1e-9);
    }

    #[test]
    fn nan_objective_errors() {
        assert!(solve_increasing(|_| (f64::NAN, 1.0), 0.0, "nan").is_err());
    }
}
