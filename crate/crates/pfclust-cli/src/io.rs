//! Point-file parsing and writing.
//!
//! Format: UTF-8 text, one point per line as `x,y` (whitespace-separated
//! also accepted), surrounding whitespace tolerated, scientific notation
//! accepted, blank lines skipped. A single leading header line is
//! auto-detected and skipped.

use std::fs;
use std::io::Read;

use pfclust::Point2;

use crate::CliError;

/// Reads a points file, or stdin when the path is `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Data(format!("cannot read stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Data(format!("cannot read {path}: {e}")))
    }
}

fn parse_line(line: &str) -> Option<Point2> {
    let fields: Vec<&str> = if line.contains(',') {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    };
    if fields.len() != 2 {
        return None;
    }
    let x1: f64 = fields[0].parse().ok()?;
    let x2: f64 = fields[1].parse().ok()?;
    Some(Point2::new(x1, x2))
}

/// Parses the whole text into points. Unparseable lines beyond an optional
/// leading header are data errors reported with their line number.
pub fn parse_points(text: &str) -> Result<Vec<Point2>, CliError> {
    let mut points = Vec::new();
    let mut header_allowed = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match parse_line(line) {
            Some(p) => {
                points.push(p);
                header_allowed = false;
            }
            None if header_allowed => {
                header_allowed = false;
            }
            None => {
                return Err(CliError::Data(format!(
                    "line {}: cannot parse {line:?} as \"x,y\"",
                    idx + 1
                )));
            }
        }
    }
    if points.is_empty() {
        return Err(CliError::Data("no points in input".into()));
    }
    Ok(points)
}

/// Renders points in the same format [`parse_points`] reads, with a header.
/// Coordinates use shortest-round-trip formatting, so write→read is exact.
pub fn write_points(points: &[Point2]) -> String {
    let mut out = String::from("x1,x2\n");
    for p in points {
        out.push_str(&format!("{},{}\n", p.x1, p.x2));
    }
    out
}
