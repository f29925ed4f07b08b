//! Point-set files: one comma-separated point per line. Blank lines and
//! lines starting with `#` are skipped.

use crate::error::{CliError, Result};

pub fn parse_points(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (number, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let point =
            parse_coordinates(line).map_err(|e| CliError::Parse(format!("line {number}: {e}")))?;
        if let Some(first) = points.first() {
            if first.len() != point.len() {
                return Err(CliError::Parse(format!(
                    "line {number}: expected {} coordinates, found {}",
                    first.len(),
                    point.len()
                )));
            }
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(CliError::Parse("no points found".into()));
    }
    Ok(points)
}

/// Parses `a,b,c` into finite numbers.
pub fn parse_coordinates(text: &str) -> std::result::Result<Vec<f64>, String> {
    text.split(',')
        .map(|field| {
            let field = field.trim();
            match field.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(format!("`{field}` is not a finite number")),
            }
        })
        .collect()
}
