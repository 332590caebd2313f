//! Deterministic SVG scatter plots of clustered fronts.
//!
//! The rendering is a pure function of the instance and the labeling: fixed
//! canvas, fixed palette, fixed-precision coordinates — identical inputs
//! produce identical bytes.

use std::fs;

use pfclust::{IntervalClustering, ParetoInstance};

use crate::CliError;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const MARGIN: f64 = 45.0;

/// Qualitative palette; labels beyond its length cycle.
const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac", "#2f4b7c", "#8c564b",
];

/// Renders the SVG for an arbitrary per-point labeling; `medoids` are drawn
/// emphasized on top of their clusters.
pub fn render_svg(inst: &ParetoInstance, labels: &[usize], medoids: &[usize]) -> String {
    let n = inst.len();
    debug_assert_eq!(labels.len(), n);
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in inst.points() {
        min_x = min_x.min(p.x1);
        max_x = max_x.max(p.x1);
        min_y = min_y.min(p.x2);
        max_y = max_y.max(p.x2);
    }
    let range_x = (max_x - min_x).max(1e-9);
    let range_y = (max_y - min_y).max(1e-9);
    let px = |x: f64| MARGIN + (x - min_x) / range_x * (WIDTH - 2.0 * MARGIN);
    // Screen y grows downward; flip so larger x2 is higher.
    let py = |y: f64| HEIGHT - MARGIN - (y - min_y) / range_y * (HEIGHT - 2.0 * MARGIN);
    let mut svg = String::with_capacity(1024 + 96 * n);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>\n"
    ));
    // Light staircase through the front, drawn under the points.
    if n > 1 {
        let path: Vec<String> = inst
            .points()
            .iter()
            .map(|p| format!("{:.3},{:.3}", px(p.x1), py(p.x2)))
            .collect();
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#d0d0d0\" stroke-width=\"1\"/>\n",
            path.join(" ")
        ));
    }
    for (i, p) in inst.points().iter().enumerate() {
        let color = PALETTE[labels[i] % PALETTE.len()];
        svg.push_str(&format!(
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"4\" fill=\"{color}\"/>\n",
            px(p.x1),
            py(p.x2)
        ));
    }
    for &m in medoids {
        let p = inst[m];
        let color = PALETTE[labels[m] % PALETTE.len()];
        svg.push_str(&format!(
            "  <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"8\" fill=\"{color}\" \
             stroke=\"#000000\" stroke-width=\"2\"/>\n",
            px(p.x1),
            py(p.x2)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Renders an interval clustering and writes the SVG to `path`.
pub fn emit_plot(
    inst: &ParetoInstance,
    clustering: &IntervalClustering,
    path: &str,
) -> Result<(), CliError> {
    let mut labels = vec![0usize; clustering.n()];
    for (l, (lo, hi)) in clustering.ranges().into_iter().enumerate() {
        for item in labels.iter_mut().take(hi + 1).skip(lo) {
            *item = l;
        }
    }
    let svg = render_svg(inst, &labels, clustering.medoids());
    fs::write(path, svg).map_err(|e| CliError::Data(format!("cannot write {path}: {e}")))
}
