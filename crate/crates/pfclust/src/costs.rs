//! Costs of contiguous clusters and incremental prefix/suffix cost scans.
//!
//! On a canonically ordered front, every optimal clustering uses contiguous
//! index ranges, so the solvers only ever need the cost of an interval
//! `[lo..=hi]`: the minimum over candidate centers `c` of the summed powered
//! distances from every member to `p[c]`. This module provides
//!
//! * an exhaustive per-interval evaluation ([`cluster_cost_naive`]),
//! * a logarithmic-probe evaluation for convex or concave fronts
//!   ([`cluster_cost_dichotomic`]),
//! * linear-space scans producing the costs of *all* prefixes (or all
//!   suffixes anchored at a fixed right endpoint) in one quadratic pass
//!   ([`prefix_costs`], [`suffix_costs`]).
//!
//! The scans exploit two structural facts about ordered fronts: dropping the
//! candidate window's left edge is safe because the smallest-index medoid
//! never moves left when a cluster grows to the right (and never moves right
//! when the cluster grows to the left), and each candidate's running sum can
//! be extended by a single distance term per step.
//!
//! Determinism: every accumulator has a fixed summation order that does not
//! depend on thread count, and windowed minima are reduced with a total
//! (value, index) order, so results are bit-identical for any worker count.

use rayon::prelude::*;

use crate::pareto::{dist_pow, Alpha, ParetoInstance, Point2};
use crate::{Error, Result};

/// Windows at or above this size use parallel workers for the per-step
/// candidate updates; smaller windows stay serial. Both paths produce
/// bit-identical results, so the threshold is purely a throughput knob.
const PAR_WINDOW: usize = 512;

/// Cost of one contiguous cluster together with its optimal center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterCost {
    pub cost: f64,
    /// Index of the optimal center (smallest index on exact ties).
    pub medoid: usize,
}

/// Sum of powered distances from every point of `[lo..=hi]` to `p[center]`,
/// accumulated in ascending index order (the canonical order used everywhere
/// a cluster cost is evaluated from scratch).
pub(crate) fn center_cost(
    inst: &ParetoInstance,
    lo: usize,
    hi: usize,
    center: usize,
    alpha: Alpha,
) -> f64 {
    let pc = inst[center];
    let mut acc = 0.0;
    for t in lo..=hi {
        acc += dist_pow(inst[t], pc, alpha);
    }
    acc
}

/// Exhaustive interval cost: minimum over candidate centers, smallest index
/// on exact ties. For clusters of three or more points only interior
/// candidates are scanned, because an endpoint is always strictly beaten by
/// its interior neighbor on an ordered front.
pub fn cluster_cost_naive(
    inst: &ParetoInstance,
    lo: usize,
    hi: usize,
    alpha: Alpha,
) -> Result<ClusterCost> {
    inst.check_range(lo, hi)?;
    match hi - lo {
        0 => Ok(ClusterCost {
            cost: 0.0,
            medoid: lo,
        }),
        1 => Ok(ClusterCost {
            cost: dist_pow(inst[lo], inst[hi], alpha),
            medoid: lo,
        }),
        _ => {
            let mut best = f64::INFINITY;
            let mut best_c = lo + 1;
            for c in lo + 1..hi {
                let v = center_cost(inst, lo, hi, c, alpha);
                if v < best {
                    best = v;
                    best_c = c;
                }
            }
            Ok(ClusterCost {
                cost: best,
                medoid: best_c,
            })
        }
    }
}

/// Shape classification of a stretch of the front, by monotonicity of the
/// slopes between consecutive points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontShape {
    /// Slopes are nondecreasing (affine stretches classify here too).
    Convex,
    /// Slopes are nonincreasing (and not constant).
    Concave,
    /// Neither monotone pattern holds; the dichotomic medoid search is not
    /// guaranteed to be exact on such a stretch.
    Neither,
}

/// Classifies `[lo..=hi]` by slope monotonicity. Two points or fewer are
/// trivially convex. Slope comparisons are cross-multiplied so no division
/// is involved (the x1 differences are strictly positive by canonical order).
pub fn front_shape(inst: &ParetoInstance, lo: usize, hi: usize) -> Result<FrontShape> {
    inst.check_range(lo, hi)?;
    if hi - lo < 2 {
        return Ok(FrontShape::Convex);
    }
    let mut nondecreasing = true;
    let mut nonincreasing = true;
    for k in lo..hi - 1 {
        let (a, b, c) = (inst[k], inst[k + 1], inst[k + 2]);
        // slope(a,b) vs slope(b,c), cross-multiplied by the positive deltas.
        let left = (b.x2 - a.x2) * (c.x1 - b.x1);
        let right = (c.x2 - b.x2) * (b.x1 - a.x1);
        if left > right {
            nondecreasing = false;
        }
        if left < right {
            nonincreasing = false;
        }
    }
    Ok(if nondecreasing {
        FrontShape::Convex
    } else if nonincreasing {
        FrontShape::Concave
    } else {
        FrontShape::Neither
    })
}

/// Dichotomic medoid search for convex or concave stretches, where the
/// candidate-center cost is unimodal in the center index.
///
/// The caller is responsible for the shape precondition (see
/// [`front_shape`]); on other stretches the result may be a local optimum
/// only. Exact ties resolve to the smallest index.
pub fn cluster_cost_dichotomic(
    inst: &ParetoInstance,
    lo: usize,
    hi: usize,
    alpha: Alpha,
) -> Result<ClusterCost> {
    cluster_cost_dichotomic_counted(inst, lo, hi, alpha).map(|(c, _)| c)
}

/// Same as [`cluster_cost_dichotomic`], additionally reporting how many
/// candidate-center costs were evaluated. The count is at most
/// `2*log2(len) + 4`: two evaluations to seed the bracket and two per
/// halving step.
pub fn cluster_cost_dichotomic_counted(
    inst: &ParetoInstance,
    lo: usize,
    hi: usize,
    alpha: Alpha,
) -> Result<(ClusterCost, u64)> {
    inst.check_range(lo, hi)?;
    match hi - lo {
        0 => {
            return Ok((
                ClusterCost {
                    cost: 0.0,
                    medoid: lo,
                },
                0,
            ))
        }
        1 => {
            return Ok((
                ClusterCost {
                    cost: dist_pow(inst[lo], inst[hi], alpha),
                    medoid: lo,
                },
                1,
            ))
        }
        2 => {
            return Ok((
                ClusterCost {
                    cost: center_cost(inst, lo, hi, lo + 1, alpha),
                    medoid: lo + 1,
                },
                1,
            ))
        }
        _ => {}
    }
    let mut probes = 0u64;
    let mut eval = |c: usize| {
        probes += 1;
        center_cost(inst, lo, hi, c, alpha)
    };
    // The optimum lies strictly inside, so bracket the interior candidates.
    let mut id_lo = lo + 1;
    let mut id_hi = hi - 1;
    let mut val_lo = eval(id_lo);
    let mut val_hi = eval(id_hi);
    while id_hi - id_lo >= 2 {
        let mid = id_lo + (id_hi - id_lo) / 2;
        let v_mid = eval(mid);
        let v_next = eval(mid + 1);
        if v_mid == v_next {
            // A two-wide plateau brackets the minimum exactly.
            id_lo = mid;
            val_lo = v_mid;
            id_hi = mid + 1;
            val_hi = v_next;
        } else if v_mid < v_next {
            id_hi = mid;
            val_hi = v_mid;
        } else {
            id_lo = mid + 1;
            val_lo = v_next;
        }
    }
    let best = if val_lo <= val_hi {
        ClusterCost {
            cost: val_lo,
            medoid: id_lo,
        }
    } else {
        ClusterCost {
            cost: val_hi,
            medoid: id_hi,
        }
    };
    Ok((best, probes))
}

/// Which family of clusters a [`CostScan`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanDirection {
    /// Entry `j` describes the prefix cluster `[0..=j]`.
    Prefix,
    /// Entry `j` describes the suffix cluster `[j..=anchor]`.
    Suffix,
}

/// Costs and medoids of a whole family of nested clusters sharing one
/// endpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct CostScan {
    /// The shared endpoint: 0 for prefix scans, the right endpoint for
    /// suffix scans.
    pub anchor: usize,
    pub direction: ScanDirection,
    /// `costs[j]` per [`ScanDirection`]. Prefix scans have `n` entries;
    /// a suffix scan anchored at `a` has `a + 1` entries.
    pub costs: Vec<f64>,
    /// Smallest-index optimal center for each entry.
    pub medoids: Vec<usize>,
    evals: u64,
}

impl CostScan {
    /// Number of distance-term evaluations the scan performed
    /// (instrumentation for pruning comparisons).
    pub fn evals(&self) -> u64 {
        self.evals
    }
}

/// Extends every in-window running sum by one distance term.
fn extend_window(acc: &mut [f64], pts: &[Point2], new_pt: Point2, alpha: Alpha) {
    debug_assert_eq!(acc.len(), pts.len());
    if acc.len() >= PAR_WINDOW {
        acc.par_iter_mut()
            .zip(pts.par_iter())
            .for_each(|(a, p)| *a += dist_pow(*p, new_pt, alpha));
    } else {
        for (a, p) in acc.iter_mut().zip(pts) {
            *a += dist_pow(*p, new_pt, alpha);
        }
    }
}

/// Minimum of a window of running sums; returns the offset of the smallest
/// value, preferring the smallest offset on exact ties. The parallel
/// reduction uses the same total (value, index) order as the serial scan.
fn window_argmin(acc: &[f64]) -> (usize, f64) {
    debug_assert!(!acc.is_empty());
    if acc.len() >= PAR_WINDOW {
        acc.par_iter()
            .copied()
            .enumerate()
            .reduce(
                || (usize::MAX, f64::INFINITY),
                |a, b| {
                    if b.1 < a.1 || (b.1 == a.1 && b.0 < a.0) {
                        b
                    } else {
                        a
                    }
                },
            )
    } else {
        let mut best = (0usize, acc[0]);
        for (i, &v) in acc.iter().enumerate().skip(1) {
            if v < best.1 {
                best = (i, v);
            }
        }
        best
    }
}

/// Incremental prefix scan: after `advance()` has run `j` times, the costs
/// and medoids of the clusters `[0..=0] ..= [0..=j]` are available.
///
/// Invariants maintained per step: the candidate window for `[0..=j]` is
/// `[medoid(j-1) ..= min(j, bound)]`; every in-window candidate `c` holds its
/// full running sum, accumulated strictly in ascending point order — which
/// makes produced values bit-identical to a fresh ascending evaluation.
pub(crate) struct PrefixScanner<'a> {
    inst: &'a ParetoInstance,
    alpha: Alpha,
    bound: usize,
    acc: Vec<f64>,
    costs: Vec<f64>,
    medoids: Vec<usize>,
    win_hi: usize,
    evals: u64,
}

impl<'a> PrefixScanner<'a> {
    /// `bound` is an inclusive cap on medoid indices that the caller asserts
    /// is valid for every prefix (any upper bound on the whole-front medoid
    /// works, `n - 1` is always safe).
    pub(crate) fn new(inst: &'a ParetoInstance, alpha: Alpha, bound: usize) -> Self {
        let n = inst.len();
        debug_assert!(bound < n);
        let mut acc = vec![0.0; n.min(bound + 2)];
        acc[0] = 0.0;
        PrefixScanner {
            inst,
            alpha,
            bound,
            acc,
            costs: vec![0.0],
            medoids: vec![0],
            win_hi: 0,
            evals: 0,
        }
    }

    /// Number of prefix entries computed so far.
    pub(crate) fn computed(&self) -> usize {
        self.costs.len()
    }

    pub(crate) fn cost(&self, j: usize) -> f64 {
        self.costs[j]
    }

    pub(crate) fn medoid(&self, j: usize) -> usize {
        self.medoids[j]
    }

    pub(crate) fn evals(&self) -> u64 {
        self.evals
    }

    /// Computes the next prefix entry; returns `false` once all are done.
    pub(crate) fn advance(&mut self) -> bool {
        let j = self.costs.len();
        let n = self.inst.len();
        if j >= n {
            return false;
        }
        let lo = self.medoids[j - 1].min(self.bound);
        let hi = j.min(self.bound);
        // A candidate entering the window needs its sum over all earlier
        // points first; the shared extension below adds the `j` term.
        while self.win_hi < hi {
            let c = self.win_hi + 1;
            let pc = self.inst[c];
            let mut s = 0.0;
            for t in 0..j {
                s += dist_pow(self.inst[t], pc, self.alpha);
            }
            self.evals += j as u64;
            self.acc[c] = s;
            self.win_hi = c;
        }
        let pj = self.inst[j];
        extend_window(
            &mut self.acc[lo..=hi],
            &self.inst.points()[lo..=hi],
            pj,
            self.alpha,
        );
        self.evals += (hi - lo + 1) as u64;
        let (off, best) = window_argmin(&self.acc[lo..=hi]);
        self.costs.push(best);
        self.medoids.push(lo + off);
        true
    }

    fn into_scan(self) -> CostScan {
        CostScan {
            anchor: 0,
            direction: ScanDirection::Prefix,
            costs: self.costs,
            medoids: self.medoids,
            evals: self.evals,
        }
    }

    /// Peak scratch footprint in buffer elements (instrumentation).
    pub(crate) fn scratch_len(&self) -> usize {
        self.acc.len() + self.costs.capacity() + self.medoids.capacity()
    }
}

/// Incremental suffix scan anchored at `anchor`: entries are produced for
/// `j' = anchor, anchor - 1, ...` down to 0, each describing `[j'..=anchor]`.
///
/// Mirror image of [`PrefixScanner`]: the candidate window for `[j'..=anchor]`
/// is `[max(j', lower) ..= medoid(j'+1)]`. Each candidate accumulates its
/// upper terms in ascending order when it enters and then one term per step
/// as the cluster grows leftward.
pub(crate) struct SuffixScanner<'a> {
    inst: &'a ParetoInstance,
    alpha: Alpha,
    anchor: usize,
    lower: usize,
    acc: Vec<f64>,
    costs_rev: Vec<f64>,
    medoids_rev: Vec<usize>,
    win_lo: usize,
    evals: u64,
}

impl<'a> SuffixScanner<'a> {
    /// `lower` is an inclusive floor on medoid indices that the caller
    /// asserts is valid for every suffix ending at `anchor` (the medoid of
    /// the full cluster `[0..=anchor]` works, 0 is always safe).
    pub(crate) fn new(inst: &'a ParetoInstance, alpha: Alpha, anchor: usize, lower: usize) -> Self {
        debug_assert!(anchor < inst.len());
        debug_assert!(lower <= anchor);
        SuffixScanner {
            inst,
            alpha,
            anchor,
            lower,
            acc: vec![0.0; anchor + 1],
            costs_rev: vec![0.0],
            medoids_rev: vec![anchor],
            win_lo: anchor,
            evals: 0,
        }
    }

    /// Lowest `j'` whose entry has been computed.
    pub(crate) fn lowest(&self) -> usize {
        self.anchor + 1 - self.costs_rev.len()
    }

    pub(crate) fn cost_at(&self, jp: usize) -> f64 {
        self.costs_rev[self.anchor - jp]
    }

    pub(crate) fn medoid_at(&self, jp: usize) -> usize {
        self.medoids_rev[self.anchor - jp]
    }

    pub(crate) fn evals(&self) -> u64 {
        self.evals
    }

    /// Computes the entry for the next smaller `j'`; `false` when done.
    pub(crate) fn advance(&mut self) -> bool {
        let lowest = self.lowest();
        if lowest == 0 {
            return false;
        }
        let jp = lowest - 1;
        let hi = self.medoid_at(jp + 1);
        let lo = jp.max(self.lower).min(hi);
        while self.win_lo > lo {
            let c = self.win_lo - 1;
            let pc = self.inst[c];
            let mut s = 0.0;
            for t in jp + 1..=self.anchor {
                s += dist_pow(self.inst[t], pc, self.alpha);
            }
            self.evals += (self.anchor - jp) as u64;
            self.acc[c] = s;
            self.win_lo = c;
        }
        let pj = self.inst[jp];
        extend_window(
            &mut self.acc[lo..=hi],
            &self.inst.points()[lo..=hi],
            pj,
            self.alpha,
        );
        self.evals += (hi - lo + 1) as u64;
        let (off, best) = window_argmin(&self.acc[lo..=hi]);
        self.costs_rev.push(best);
        self.medoids_rev.push(lo + off);
        true
    }

    /// Advances until the entry for `jp` exists.
    pub(crate) fn advance_down_to(&mut self, jp: usize) {
        while self.lowest() > jp {
            let more = self.advance();
            debug_assert!(more);
        }
    }

    fn into_scan(self) -> CostScan {
        let mut costs = self.costs_rev;
        let mut medoids = self.medoids_rev;
        costs.reverse();
        medoids.reverse();
        CostScan {
            anchor: self.anchor,
            direction: ScanDirection::Suffix,
            costs,
            medoids,
            evals: self.evals,
        }
    }

    pub(crate) fn scratch_len(&self) -> usize {
        self.acc.len() + self.costs_rev.capacity() + self.medoids_rev.capacity()
    }
}

/// Costs and medoids of every prefix cluster `[0..=j]`, in one O(n^2) pass
/// with O(n) memory.
///
/// `center_upper_bound`, when given, must be a valid inclusive upper bound on
/// the medoid index of the full front (and hence, by monotonicity, of every
/// prefix); it narrows the candidate windows but never changes the result.
pub fn prefix_costs(
    inst: &ParetoInstance,
    alpha: Alpha,
    center_upper_bound: Option<usize>,
) -> Result<CostScan> {
    let n = inst.len();
    let bound = match center_upper_bound {
        None => n - 1,
        Some(b) => {
            if b >= n {
                return Err(Error::InvalidBound { bound: b, n });
            }
            b
        }
    };
    let mut scanner = PrefixScanner::new(inst, alpha, bound);
    while scanner.advance() {}
    Ok(scanner.into_scan())
}

/// Costs and medoids of every suffix cluster `[j'..=anchor]`, mirror of
/// [`prefix_costs`].
///
/// `center_lower_bound`, when given, must be a valid inclusive lower bound on
/// the medoid index of the full cluster `[0..=anchor]` (and hence of every
/// suffix of it).
pub fn suffix_costs(
    inst: &ParetoInstance,
    anchor: usize,
    alpha: Alpha,
    center_lower_bound: Option<usize>,
) -> Result<CostScan> {
    let n = inst.len();
    if anchor >= n {
        return Err(Error::IndexOutOfRange {
            lo: 0,
            hi: anchor,
            n,
        });
    }
    let lower = match center_lower_bound {
        None => 0,
        Some(b) => {
            if b > anchor {
                return Err(Error::InvalidBound { bound: b, n });
            }
            b
        }
    };
    let mut scanner = SuffixScanner::new(inst, alpha, anchor, lower);
    while scanner.advance() {}
    Ok(scanner.into_scan())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pareto::Point2;
    use crate::synth;
    use proptest::prelude::*;

    fn inst_of(points: &[(f64, f64)]) -> ParetoInstance {
        let pts: Vec<Point2> = points.iter().map(|&(a, b)| Point2::new(a, b)).collect();
        ParetoInstance::build(&pts, true).unwrap()
    }

    fn affine5() -> ParetoInstance {
        inst_of(&[(0.0, 4.0), (1.0, 3.0), (2.0, 2.0), (3.0, 1.0), (4.0, 0.0)])
    }

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    /// Independent oracle: scan *all* centers (endpoints included) with
    /// fresh ascending sums.
    fn cost_oracle(inst: &ParetoInstance, lo: usize, hi: usize, alpha: Alpha) -> ClusterCost {
        let mut best = f64::INFINITY;
        let mut best_c = lo;
        for c in lo..=hi {
            let mut s = 0.0;
            for t in lo..=hi {
                s += dist_pow(inst[t], inst[c], alpha);
            }
            if s < best {
                best = s;
                best_c = c;
            }
        }
        ClusterCost {
            cost: best,
            medoid: best_c,
        }
    }

    #[test]
    fn naive_cost_examples() {
        let inst = affine5();
        let whole = cluster_cost_naive(&inst, 0, 4, a(2.0)).unwrap();
        assert_eq!(whole.cost, 20.0);
        assert_eq!(whole.medoid, 2);
        // Centers 1 and 2 tie at 12 for the first four points; smallest wins.
        let four = cluster_cost_naive(&inst, 0, 3, a(2.0)).unwrap();
        assert_eq!(four.cost, 12.0);
        assert_eq!(four.medoid, 1);
        let single = cluster_cost_naive(&inst, 2, 2, a(2.0)).unwrap();
        assert_eq!(single.cost, 0.0);
        assert_eq!(single.medoid, 2);
        let pair = cluster_cost_naive(&inst, 1, 2, a(2.0)).unwrap();
        assert_eq!(pair.cost, 2.0);
        assert_eq!(pair.medoid, 1);
    }

    #[test]
    fn naive_cost_rejects_bad_range() {
        let inst = affine5();
        assert!(matches!(
            cluster_cost_naive(&inst, 3, 2, a(2.0)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            cluster_cost_naive(&inst, 0, 5, a(2.0)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn shape_examples() {
        let affine = affine5();
        assert_eq!(front_shape(&affine, 0, 4).unwrap(), FrontShape::Convex);
        let kinked = inst_of(&[(0.0, 4.0), (1.0, 1.0), (2.0, 0.9), (3.0, 0.0)]);
        assert_eq!(front_shape(&kinked, 0, 3).unwrap(), FrontShape::Neither);
        assert_eq!(front_shape(&kinked, 0, 1).unwrap(), FrontShape::Convex);
        let convex = synth::convex_front(40).unwrap();
        assert_eq!(front_shape(&convex, 0, 39).unwrap(), FrontShape::Convex);
        let concave = synth::concave_front(40).unwrap();
        assert_eq!(front_shape(&concave, 0, 39).unwrap(), FrontShape::Concave);
    }

    #[test]
    fn dichotomic_base_cases() {
        let inst = affine5();
        let (pair, probes) = cluster_cost_dichotomic_counted(&inst, 2, 3, a(2.0)).unwrap();
        assert_eq!(pair.cost, 2.0);
        assert_eq!(pair.medoid, 2);
        assert_eq!(probes, 1);
        let (triple, probes) = cluster_cost_dichotomic_counted(&inst, 1, 3, a(2.0)).unwrap();
        assert_eq!(triple.medoid, 2);
        assert_eq!(triple.cost, 4.0);
        assert_eq!(probes, 1);
        let (single, probes) = cluster_cost_dichotomic_counted(&inst, 4, 4, a(1.0)).unwrap();
        assert_eq!((single.cost, single.medoid), (0.0, 4));
        assert_eq!(probes, 0);
    }

    #[test]
    fn dichotomic_matches_naive_on_curved_fronts() {
        for inst in [
            synth::convex_front(64).unwrap(),
            synth::concave_front(64).unwrap(),
        ] {
            for alpha in [a(1.0), a(2.0), a(3.0)] {
                let naive = cluster_cost_naive(&inst, 0, 63, alpha).unwrap();
                let (dich, probes) = cluster_cost_dichotomic_counted(&inst, 0, 63, alpha).unwrap();
                assert_eq!(dich.cost, naive.cost);
                assert_eq!(dich.medoid, naive.medoid);
                assert!(probes <= 2 * 6 + 4, "probes = {probes}");
                // Sub-ranges as well.
                for (lo, hi) in [(3, 40), (10, 63), (0, 31)] {
                    let naive = cluster_cost_naive(&inst, lo, hi, alpha).unwrap();
                    let dich = cluster_cost_dichotomic(&inst, lo, hi, alpha).unwrap();
                    assert_eq!(dich.cost, naive.cost);
                    assert_eq!(dich.medoid, naive.medoid);
                }
            }
        }
    }

    #[test]
    fn dichotomic_smallest_index_on_ties() {
        // Affine fronts tie symmetric centers; the smaller index must win.
        let inst = synth::affine_front(8).unwrap();
        let naive = cluster_cost_naive(&inst, 0, 7, a(2.0)).unwrap();
        let dich = cluster_cost_dichotomic(&inst, 0, 7, a(2.0)).unwrap();
        assert_eq!(naive.medoid, 3);
        assert_eq!(dich.cost, naive.cost);
        assert_eq!(dich.medoid, naive.medoid);
    }

    #[test]
    fn prefix_scan_example() {
        let inst = affine5();
        let scan = prefix_costs(&inst, a(2.0), None).unwrap();
        assert_eq!(scan.costs, vec![0.0, 2.0, 4.0, 12.0, 20.0]);
        assert_eq!(scan.medoids, vec![0, 0, 1, 1, 2]);
        assert_eq!(scan.direction, ScanDirection::Prefix);
        assert_eq!(scan.anchor, 0);
        // A valid medoid cap does not change anything.
        let capped = prefix_costs(&inst, a(2.0), Some(2)).unwrap();
        assert_eq!(capped.costs, scan.costs);
        assert_eq!(capped.medoids, scan.medoids);
    }

    #[test]
    fn suffix_scan_example() {
        let inst = affine5();
        let scan = suffix_costs(&inst, 4, a(2.0), None).unwrap();
        assert_eq!(scan.costs, vec![20.0, 12.0, 4.0, 2.0, 0.0]);
        assert_eq!(scan.medoids, vec![2, 2, 3, 3, 4]);
        assert_eq!(scan.direction, ScanDirection::Suffix);
        assert_eq!(scan.anchor, 4);
        let bounded = suffix_costs(&inst, 4, a(2.0), Some(2)).unwrap();
        assert_eq!(bounded.costs, scan.costs);
        assert_eq!(bounded.medoids, scan.medoids);
    }

    #[test]
    fn scan_bounds_are_validated() {
        let inst = affine5();
        assert!(matches!(
            prefix_costs(&inst, a(2.0), Some(5)),
            Err(Error::InvalidBound { .. })
        ));
        assert!(matches!(
            suffix_costs(&inst, 2, a(2.0), Some(3)),
            Err(Error::InvalidBound { .. })
        ));
        assert!(matches!(
            suffix_costs(&inst, 5, a(2.0), None),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// On ordered fronts, moving the far endpoint of a pair away from a
        /// shared reference strictly increases the distance.
        #[test]
        fn ordered_distances_are_strict(seed in 0u64..5000, alpha_i in 0usize..4) {
            let alpha = a([0.5, 1.0, 2.0, 3.0][alpha_i]);
            let inst = synth::random_front(12, seed).unwrap();
            for i in 0..12 {
                for j in i..12 {
                    for k in j + 1..12 {
                        let d_ij = dist_pow(inst[i], inst[j], alpha);
                        let d_ik = dist_pow(inst[i], inst[k], alpha);
                        let d_jk = dist_pow(inst[j], inst[k], alpha);
                        prop_assert!(d_ij < d_ik);
                        prop_assert!(d_jk < d_ik || j == i);
                        if j > i { prop_assert!(d_jk < d_ik); }
                    }
                }
            }
        }

        /// Interval cost is monotone under inclusion, and the optimum of any
        /// cluster of three or more points is strictly interior.
        #[test]
        fn cost_monotone_and_interior(n in 3usize..32, seed in 0u64..5000, alpha_i in 0usize..4) {
            let alpha = a([0.5, 1.0, 2.0, 3.0][alpha_i]);
            let inst = synth::random_front(n, seed).unwrap();
            let mut costs = vec![vec![0.0f64; n]; n];
            for (lo, row) in costs.iter_mut().enumerate() {
                for (hi, slot) in row.iter_mut().enumerate().skip(lo) {
                    let cc = cluster_cost_naive(&inst, lo, hi, alpha).unwrap();
                    *slot = cc.cost;
                    if hi - lo >= 2 {
                        prop_assert!(cc.medoid > lo && cc.medoid < hi);
                    }
                }
            }
            for lo in 0..n {
                for hi in lo..n {
                    if lo > 0 {
                        prop_assert!(costs[lo][hi] <= costs[lo - 1][hi]);
                    }
                    if hi + 1 < n {
                        prop_assert!(costs[lo][hi] <= costs[lo][hi + 1]);
                    }
                }
            }
        }

        /// Every scan entry agrees with the exhaustive evaluation, and the
        /// medoid sequences are monotone, which is what justifies the
        /// windows in the first place.
        #[test]
        fn scans_match_exhaustive_evaluation(n in 1usize..36, seed in 0u64..5000, alpha_i in 0usize..4) {
            let alpha = a([0.5, 1.0, 2.0, 3.0][alpha_i]);
            let inst = synth::random_front(n, seed).unwrap();
            let prefix = prefix_costs(&inst, alpha, None).unwrap();
            for j in 0..n {
                let oracle = cost_oracle(&inst, 0, j, alpha);
                // Prefix accumulation order matches a fresh ascending sum,
                // so values agree exactly.
                prop_assert_eq!(prefix.costs[j], oracle.cost);
                prop_assert_eq!(prefix.medoids[j], oracle.medoid);
                if j > 0 {
                    prop_assert!(prefix.medoids[j - 1] <= prefix.medoids[j]);
                }
            }
            let anchor = n - 1;
            let suffix = suffix_costs(&inst, anchor, alpha, Some(prefix.medoids[anchor])).unwrap();
            for jp in 0..=anchor {
                let oracle = cost_oracle(&inst, jp, anchor, alpha);
                let rel = (suffix.costs[jp] - oracle.cost).abs()
                    / oracle.cost.abs().max(1.0);
                prop_assert!(rel <= 1e-12, "suffix cost off by {rel}");
                prop_assert_eq!(suffix.medoids[jp], oracle.medoid);
                if jp > 0 {
                    prop_assert!(suffix.medoids[jp - 1] <= suffix.medoids[jp]);
                }
            }
        }
    }
}
