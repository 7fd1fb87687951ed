//! Parsing of value-grid flags.
//!
//! Three forms are accepted:
//!
//! - a comma list: `0.25,0.5,1,2,4`
//! - a linear range with step: `0..4:0.5` (both endpoints included)
//! - a log-spaced range with point count: `log:1e-3..1:25`

use anyhow::{bail, ensure, Context, Result};

pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    ensure!(!spec.is_empty(), "empty grid specification");
    if let Some(rest) = spec.strip_prefix("log:") {
        return parse_log_range(rest);
    }
    if spec.contains("..") {
        return parse_linear_range(spec);
    }
    spec.split(',')
        .map(|tok| {
            let v: f64 = tok
                .trim()
                .parse()
                .with_context(|| format!("invalid grid value {tok:?}"))?;
            ensure!(v.is_finite(), "grid value {v} is not finite");
            Ok(v)
        })
        .collect()
}

fn split_range(spec: &str) -> Result<(f64, f64, &str)> {
    let (range, tail) = spec
        .rsplit_once(':')
        .with_context(|| format!("expected start..end:step, got {spec:?}"))?;
    let (start, end) = range
        .split_once("..")
        .with_context(|| format!("expected start..end, got {range:?}"))?;
    let start: f64 = start
        .trim()
        .parse()
        .with_context(|| format!("invalid range start {start:?}"))?;
    let end: f64 = end
        .trim()
        .parse()
        .with_context(|| format!("invalid range end {end:?}"))?;
    ensure!(
        start.is_finite() && end.is_finite(),
        "range endpoints must be finite"
    );
    ensure!(start <= end, "range start {start} exceeds end {end}");
    Ok((start, end, tail.trim()))
}

fn parse_linear_range(spec: &str) -> Result<Vec<f64>> {
    let (start, end, step) = split_range(spec)?;
    let step: f64 = step
        .parse()
        .with_context(|| format!("invalid step {step:?}"))?;
    ensure!(
        step > 0.0 && step.is_finite(),
        "step must be positive, got {step}"
    );
    let count = ((end - start) / step + 1e-9).floor() as usize + 1;
    let mut values: Vec<f64> = (0..count).map(|i| start + i as f64 * step).collect();
    // Snap the final point onto the endpoint when the step lands there.
    if let Some(last) = values.last_mut() {
        if (*last - end).abs() <= 1e-9 * step {
            *last = end;
        }
    }
    Ok(values)
}

fn parse_log_range(spec: &str) -> Result<Vec<f64>> {
    let (start, end, count) = split_range(spec)?;
    let count: usize = count
        .parse()
        .with_context(|| format!("invalid point count {count:?}"))?;
    ensure!(
        start > 0.0,
        "log spacing needs a positive start, got {start}"
    );
    if count < 2 {
        bail!("log grid needs at least 2 points, got {count}");
    }
    let log_start = start.ln();
    let log_end = end.ln();
    let mut values: Vec<f64> = (0..count)
        .map(|i| (log_start + (log_end - log_start) * i as f64 / (count - 1) as f64).exp())
        .collect();
    values[0] = start;
    values[count - 1] = end;
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comma_lists() {
        assert_eq!(parse_grid("1").unwrap(), vec![1.0]);
        assert_eq!(parse_grid("0.5, 1,2").unwrap(), vec![0.5, 1.0, 2.0]);
        assert!(parse_grid("a,b").is_err());
        assert!(parse_grid("").is_err());
    }

    #[test]
    fn linear_ranges() {
        let grid = parse_grid("0..4:0.5").unwrap();
        assert_eq!(grid.len(), 9);
        assert_eq!(grid[0], 0.0);
        assert_eq!(grid[8], 4.0);
        assert_eq!(grid[3], 1.5);

        assert_eq!(parse_grid("1..1:0.5").unwrap(), vec![1.0]);
        assert!(parse_grid("4..0:0.5").is_err());
        assert!(parse_grid("0..4:-1").is_err());
    }

    #[test]
    fn log_ranges() {
        let grid = parse_grid("log:1e-3..1:25").unwrap();
        assert_eq!(grid.len(), 25);
        assert_eq!(grid[0], 1e-3);
        assert_eq!(grid[24], 1.0);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        // Uniform ratio between consecutive points.
        let r0 = grid[1] / grid[0];
        let r1 = grid[13] / grid[12];
        assert!((r0 - r1).abs() < 1e-9);

        assert!(parse_grid("log:0..1:5").is_err());
        assert!(parse_grid("log:1e-3..1:1").is_err());
    }
}
