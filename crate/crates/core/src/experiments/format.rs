//! Number formatting and α grids shared by the CSV writers.

use crate::error::{Error, Result};

/// Rounds to `decimals` places, ties to even.
pub fn round_half_even(x: f64, decimals: i32) -> f64 {
    let scale = 10f64.powi(decimals);
    (x * scale).round_ties_even() / scale
}

/// Table cell text: five decimals, ties to even, always with a decimal point
/// (`2` prints as `2.0`).
pub fn format_value(x: f64) -> String {
    format_plain(round_half_even(x, 5))
}

/// `x` in shortest round-trip form with a guaranteed decimal point.
pub fn format_plain(x: f64) -> String {
    let s = format!("{x}");
    if x.is_finite() && !s.contains('.') {
        s + ".0"
    } else {
        s
    }
}

/// α values are stored rounded to 12 decimals so `0.1 + 0.2` prints as `0.3`.
pub fn clean_alpha(a: f64) -> f64 {
    round_half_even(a, 12)
}

/// `start, start + step, …` strictly below `stop` (with a small epsilon so
/// accumulated error does not add or drop a point).
pub fn alpha_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if step.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
        || !start.is_finite()
        || !stop.is_finite()
    {
        return Err(Error::InvalidArgument(format!(
            "alpha grid {start}:{stop}:{step} needs finite bounds and a positive step"
        )));
    }
    let eps = step * 1e-9;
    let mut out = Vec::new();
    let mut k = 0u32;
    loop {
        let a = clean_alpha(start + f64::from(k) * step);
        if a >= stop - eps {
            break;
        }
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::AlphaOutOfRange(a, "[0, 1]"));
        }
        out.push(a);
        k += 1;
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "alpha grid {start}:{stop}:{step} is empty"
        )));
    }
    Ok(out)
}

/// Parses `start:stop:step` or a single value.
pub fn parse_alpha_spec(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::InvalidArgument(format!("bad number {s:?} in alpha spec {spec:?}")))
    };
    match parts.as_slice() {
        [one] => {
            let a = num(one)?;
            if !(0.0..=1.0).contains(&a) {
                return Err(Error::AlphaOutOfRange(a, "[0, 1]"));
            }
            Ok(vec![a])
        }
        [a, b, c] => alpha_grid(num(a)?, num(b)?, num(c)?),
        _ => Err(Error::InvalidArgument(format!(
            "alpha spec {spec:?} must be a value or start:stop:step"
        ))),
    }
}

/// `0.0, 0.1, …, 0.9`.
pub fn table_alpha_grid() -> Vec<f64> {
    (0..10).map(|k| clean_alpha(f64::from(k) / 10.0)).collect()
}

/// `0.0, 0.05, …, 1.0`.
pub fn figure_alpha_grid() -> Vec<f64> {
    (0..=20).map(|k| clean_alpha(f64::from(k) / 20.0)).collect()
}

/// `"u-v;u-v;…"`.
pub fn edge_list_field(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(";")
}
