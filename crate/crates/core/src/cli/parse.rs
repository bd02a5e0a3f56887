//! Parsers for compound flag values.

use crate::measures::BaseMeasure;

/// `start:stop:step`, e.g. `0.1:1.0:0.1`, or an explicit comma list.
///
/// Range points are rounded to the decimals written in `start` and `step` so
/// that `0.1:1.0:0.1` yields exactly `0.3` rather than `0.30000000000000004`.
pub fn grid(s: &str) -> Result<Vec<f64>, String> {
    if !s.contains(':') {
        return list(s);
    }
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    let [start, stop, step] = parts[..] else {
        return Err(format!("grid must be start:stop:step, got {s:?}"));
    };
    let (a, b, h) = (number(start)?, number(stop)?, number(step)?);
    if !(h > 0.0) || b < a {
        return Err(format!("grid needs step > 0 and stop >= start, got {s:?}"));
    }
    let count = ((b - a) / h + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(format!("grid {s:?} has {count} points"));
    }
    let decimals = decimals(start).max(decimals(step));
    (0..count)
        .map(|k| {
            let x = a + k as f64 * h;
            format!("{x:.decimals$}").parse::<f64>().map_err(|e| e.to_string())
        })
        .collect()
}

fn decimals(s: &str) -> usize {
    if s.contains(['e', 'E']) {
        return 17;
    }
    s.split_once('.').map_or(0, |(_, frac)| frac.len())
}

fn number(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|_| format!("not a number: {s:?}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("not a finite number: {s:?}"))
    }
}

pub fn list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',').map(number).collect()
}

pub fn index_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("not a non-negative integer: {t:?}")))
        .collect()
}

/// `uniform:a,b`, `normal:mu,sigma` or `exponential:rate`.
pub fn base(s: &str) -> Result<BaseMeasure, String> {
    let (kind, args) = s.split_once(':').unwrap_or((s, ""));
    let args = if args.is_empty() { Vec::new() } else { list(args)? };
    let h = match (kind.trim(), args.as_slice()) {
        ("uniform", &[]) => Ok(BaseMeasure::default()),
        ("uniform", &[a, b]) => BaseMeasure::uniform(a, b),
        ("normal", &[]) => BaseMeasure::normal(0.0, 1.0),
        ("normal", &[mu, sigma]) => BaseMeasure::normal(mu, sigma),
        ("exponential", &[]) => BaseMeasure::exponential(1.0),
        ("exponential", &[rate]) => BaseMeasure::exponential(rate),
        _ => return Err(format!("unrecognized base measure {s:?}; expected uniform:a,b, normal:mu,sigma or exponential:rate")),
    };
    h.map_err(|e| e.to_string())
}
