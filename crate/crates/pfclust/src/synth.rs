//! Deterministic generators for test and benchmark fronts.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::pareto::{ParetoInstance, Point2};
use crate::{Error, Result};

/// Evenly spaced affine front: point `i` is `(i, n - 1 - i)`.
pub fn affine_front(n: usize) -> Result<ParetoInstance> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let pts: Vec<Point2> = (0..n)
        .map(|i| Point2::new(i as f64, (n - 1 - i) as f64))
        .collect();
    ParetoInstance::build(&pts, true)
}

/// Convex front sampled from `x2 = 1 / x1` at `x1 = 1..=n` (slopes
/// nondecreasing).
pub fn convex_front(n: usize) -> Result<ParetoInstance> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let pts: Vec<Point2> = (0..n)
        .map(|i| {
            let x = (i + 1) as f64;
            Point2::new(x, 1.0 / x)
        })
        .collect();
    ParetoInstance::build(&pts, true)
}

/// Concave front sampled from a quarter circle (slopes nonincreasing).
pub fn concave_front(n: usize) -> Result<ParetoInstance> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let pts: Vec<Point2> = (0..n)
        .map(|i| {
            let t = if n == 1 {
                0.0
            } else {
                std::f64::consts::FRAC_PI_2 * i as f64 / (n - 1) as f64
            };
            Point2::new(t.sin(), t.cos())
        })
        .collect();
    ParetoInstance::build(&pts, true)
}

/// Random strict front: both coordinates move by independent uniform gaps in
/// `[0.05, 1.05)`, x1 upward and x2 downward. Reproducible from the seed on
/// every platform (ChaCha8 stream).
pub fn random_front(n: usize, seed: u64) -> Result<ParetoInstance> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(n);
    let mut x1 = 0.0f64;
    let mut x2 = 0.0f64;
    for _ in 0..n {
        x1 += rng.gen_range(0.05..1.05);
        x2 += rng.gen_range(0.05..1.05);
        pts.push((x1, x2));
    }
    let top = x2 + 0.05;
    let pts: Vec<Point2> = pts
        .into_iter()
        .map(|(a, b)| Point2::new(a, top - b))
        .collect();
    ParetoInstance::build(&pts, true)
}
