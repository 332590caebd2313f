//! Points, dominance, Pareto-front extraction, and powered distances.
//!
//! Everything downstream operates on a [`ParetoInstance`]: a strict 2-d
//! Pareto front (both objectives minimized) stored in canonical order, i.e.
//! first coordinates strictly increasing and second coordinates strictly
//! decreasing. All indices in the library API are 0-based; the CLI converts
//! to 1-based positions when rendering output.

use crate::{Error, Result};

/// A point in objective space (two criteria, both minimized).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x1: f64,
    pub x2: f64,
}

impl Point2 {
    pub fn new(x1: f64, x2: f64) -> Self {
        Point2 { x1, x2 }
    }

    /// Both coordinates are finite (no NaN, no infinities).
    pub fn is_finite(&self) -> bool {
        self.x1.is_finite() && self.x2.is_finite()
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x1, x2): (f64, f64)) -> Self {
        Point2::new(x1, x2)
    }
}

/// Weak dominance for minimization: `a` dominates `b` iff `a` is no worse in
/// both coordinates and the points differ.
pub fn dominates(a: Point2, b: Point2) -> bool {
    a.x1 <= b.x1 && a.x2 <= b.x2 && a != b
}

/// `a` and `b` are incomparable iff exactly one coordinate of `a` is strictly
/// smaller and the other strictly larger than `b`'s.
pub fn incomparable(a: Point2, b: Point2) -> bool {
    (a.x1 < b.x1 && a.x2 > b.x2) || (b.x1 < a.x1 && b.x2 > a.x2)
}

/// Distance exponent, validated once at the API boundary.
///
/// Construction rejects non-positive (or non-finite) values, so downstream
/// code can evaluate powered distances without re-checking. The exponents
/// 1 (sum of distances) and 2 (sum of squared distances, no root at all)
/// use dedicated fast paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Alpha {
    value: f64,
    kind: PowKind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum PowKind {
    Linear,
    Squared,
    General,
}

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::NonPositiveAlpha(value));
        }
        let kind = if value == 1.0 {
            PowKind::Linear
        } else if value == 2.0 {
            PowKind::Squared
        } else {
            PowKind::General
        };
        Ok(Alpha { value, kind })
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Alpha::new(value)
    }
}

/// Squared Euclidean distance; used internally wherever only the *ordering*
/// of distances matters (nearest-medoid tests), since squaring preserves it.
pub(crate) fn dist_sq(a: Point2, b: Point2) -> f64 {
    let dx = a.x1 - b.x1;
    let dy = a.x2 - b.x2;
    dx * dx + dy * dy
}

/// Euclidean distance between `a` and `b`, raised to the power `alpha`.
pub fn dist_pow(a: Point2, b: Point2, alpha: Alpha) -> f64 {
    let dx = a.x1 - b.x1;
    let dy = a.x2 - b.x2;
    let sq = dx * dx + dy * dy;
    match alpha.kind {
        PowKind::Squared => sq,
        PowKind::Linear => sq.sqrt(),
        PowKind::General => sq.powf(alpha.value * 0.5),
    }
}

/// Extracts the Pareto front of `points`: the maximal subset of mutually
/// incomparable points, sorted by increasing first coordinate. Dominated
/// points are dropped and exact duplicates collapse to one representative.
pub fn extract_front(points: &[Point2]) -> Vec<Point2> {
    let mut sorted: Vec<Point2> = points.to_vec();
    // Total order: coordinates are finite by the caller's contract.
    sorted.sort_by(|a, b| {
        (a.x1, a.x2)
            .partial_cmp(&(b.x1, b.x2))
            .expect("finite coordinates compare totally")
    });
    let mut front: Vec<Point2> = Vec::new();
    for p in sorted {
        match front.last() {
            // After the sort, `p` survives iff it strictly improves the
            // second coordinate over everything kept so far. Equal x1 with
            // larger x2, equal x2 with larger x1, and duplicates all fail.
            Some(last) if p.x2 >= last.x2 => {}
            _ => front.push(p),
        }
    }
    front
}

/// A validated 2-d Pareto front in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoInstance {
    points: Vec<Point2>,
}

impl ParetoInstance {
    /// Builds an instance from raw points.
    ///
    /// With `assume_front = true` the input is sorted by first coordinate and
    /// then *validated*: any adjacent pair that is not strictly increasing in
    /// x1 and strictly decreasing in x2 yields [`Error::NotAParetoFront`]
    /// with the offending pair of sorted positions. With `assume_front =
    /// false` the Pareto front is extracted first (dominated points dropped,
    /// duplicates collapsed).
    pub fn build(points: &[Point2], assume_front: bool) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, p) in points.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::NonFiniteCoordinate { index });
            }
        }
        let canonical = if assume_front {
            let mut sorted = points.to_vec();
            sorted.sort_by(|a, b| {
                (a.x1, a.x2)
                    .partial_cmp(&(b.x1, b.x2))
                    .expect("validated finite")
            });
            for i in 0..sorted.len() - 1 {
                let (a, b) = (sorted[i], sorted[i + 1]);
                if !(a.x1 < b.x1 && a.x2 > b.x2) {
                    return Err(Error::NotAParetoFront { i, j: i + 1 });
                }
            }
            sorted
        } else {
            extract_front(points)
        };
        Ok(ParetoInstance { points: canonical })
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points in canonical order.
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point2 {
        self.points[i]
    }

    /// Validates an inclusive index range against this instance.
    pub(crate) fn check_range(&self, lo: usize, hi: usize) -> Result<()> {
        if lo > hi || hi >= self.points.len() {
            return Err(Error::IndexOutOfRange {
                lo,
                hi,
                n: self.points.len(),
            });
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for ParetoInstance {
    type Output = Point2;

    fn index(&self, i: usize) -> &Point2 {
        &self.points[i]
    }
}
