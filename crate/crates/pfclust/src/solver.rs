//! Exact solvers: single-cluster, two-cluster fast path, and the general
//! K-cluster dynamic program.
//!
//! The recurrence is over prefixes: the best cost of covering `[0..=i]` with
//! `t + 1` clusters equals the minimum over split points `j` of the best
//! `t`-cluster cost of `[0..=j]` plus the single-cluster cost of
//! `[j+1..=i]`. The inner suffix costs come from one incremental scan per
//! column, giving cubic time and linear scratch memory; the table itself is
//! the only quadratic-size allocation (`K * n` cells).
//!
//! Pruning (optional, on by default in the CLI) walks split points from the
//! right and stops as soon as the bare suffix cost exceeds the best total
//! found for the cell: growing the suffix further can only cost more. With
//! pruning on or off, totals and chosen breaks are identical; only the
//! amount of work differs.

use crate::costs::{
    cluster_cost_dichotomic_counted, cluster_cost_naive, front_shape, prefix_costs, suffix_costs,
    CostScan, FrontShape, PrefixScanner, SuffixScanner,
};
use crate::pareto::{dist_sq, Alpha, ParetoInstance};
use crate::{Error, Result};

/// A clustering of an `n`-point front into contiguous index ranges.
///
/// Stored as the exclusive end of every cluster but the last, in increasing
/// order; cluster `t` covers `[start_t ..= breaks[t] - 1]` with
/// `start_0 = 0` and `start_t = breaks[t-1]`. All indices 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalClustering {
    n: usize,
    breaks: Vec<usize>,
    medoids: Vec<usize>,
    cluster_costs: Vec<f64>,
    total: f64,
}

impl IntervalClustering {
    /// Validates shape: `breaks` strictly increasing within `(0, n)`, one
    /// medoid and one cost per cluster, each medoid inside its own range.
    pub fn try_new(
        n: usize,
        breaks: Vec<usize>,
        medoids: Vec<usize>,
        cluster_costs: Vec<f64>,
        total: f64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let k = medoids.len();
        if k == 0 || k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        if breaks.len() + 1 != k {
            return Err(Error::MalformedPartition(format!(
                "{} clusters need {} breaks, got {}",
                k,
                k - 1,
                breaks.len()
            )));
        }
        if cluster_costs.len() != k {
            return Err(Error::MalformedPartition(format!(
                "{} clusters but {} costs",
                k,
                cluster_costs.len()
            )));
        }
        let mut prev = 0usize;
        for &b in &breaks {
            if b <= prev || b >= n {
                return Err(Error::MalformedPartition(format!(
                    "breaks must be strictly increasing within (0, {n}), got {breaks:?}"
                )));
            }
            prev = b;
        }
        let c = IntervalClustering {
            n,
            breaks,
            medoids,
            cluster_costs,
            total,
        };
        for (t, (lo, hi)) in c.ranges().into_iter().enumerate() {
            let m = c.medoids[t];
            if m < lo || m > hi {
                return Err(Error::MalformedPartition(format!(
                    "medoid {m} of cluster {t} outside its range [{lo}, {hi}]"
                )));
            }
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of clusters.
    pub fn k(&self) -> usize {
        self.medoids.len()
    }

    /// Exclusive end of every cluster but the last, strictly increasing.
    pub fn breaks(&self) -> &[usize] {
        &self.breaks
    }

    pub fn medoids(&self) -> &[usize] {
        &self.medoids
    }

    pub fn cluster_costs(&self) -> &[f64] {
        &self.cluster_costs
    }

    pub fn total(&self) -> f64 {
        self.total
    }

    /// Inclusive `(lo, hi)` range of every cluster, in order.
    pub fn ranges(&self) -> Vec<(usize, usize)> {
        let k = self.k();
        let mut out = Vec::with_capacity(k);
        let mut lo = 0usize;
        for t in 0..k {
            let hi = if t + 1 == k {
                self.n - 1
            } else {
                self.breaks[t] - 1
            };
            out.push((lo, hi));
            lo = hi + 1;
        }
        out
    }
}

/// The dynamic-programming table. `get(t, i)` is the optimal cost of
/// covering `[0..=i]` with `t + 1` clusters, `None` where the cell is never
/// needed for an `n`-point, `k`-cluster solve (the sentinel stays in place).
#[derive(Debug, Clone, PartialEq)]
pub struct DpTable {
    k: usize,
    n: usize,
    cells: Vec<f64>,
}

impl DpTable {
    fn new(k: usize, n: usize) -> Self {
        DpTable {
            k,
            n,
            cells: vec![f64::INFINITY; k * n],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: usize, i: usize) -> Option<f64> {
        let v = self.cells[t * self.n + i];
        v.is_finite().then_some(v)
    }

    pub fn populated(&self, t: usize, i: usize) -> bool {
        self.get(t, i).is_some()
    }

    fn set(&mut self, t: usize, i: usize, v: f64) {
        self.cells[t * self.n + i] = v;
    }

    fn get_raw(&self, t: usize, i: usize) -> f64 {
        let v = self.cells[t * self.n + i];
        debug_assert!(v.is_finite(), "read of unpopulated cell ({t}, {i})");
        v
    }

    /// Total number of allocated cells (`k * n`).
    pub fn cells_allocated(&self) -> usize {
        self.cells.len()
    }
}

/// Work counters from a solve (instrumentation; no effect on results).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Distance terms evaluated across all scans, including backtracking.
    pub cost_evals: u64,
    /// Cells allocated in the DP table (0 for the non-table fast paths).
    pub dp_cells: usize,
    /// Largest combined footprint, in elements, of the scan buffers live at
    /// any one time. Linear in `n` by construction.
    pub peak_scratch: usize,
}

/// One locally optimal two-cluster split (see [`local_minima_k2`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalMinimumReport {
    /// Last index of the first cluster (0-based); the second cluster starts
    /// at `split + 1`.
    pub split: usize,
    pub prefix_medoid: usize,
    pub suffix_medoid: usize,
    pub total: f64,
}

/// Optimal single cluster over the whole front. With `use_dichotomic`, a
/// convex or concave front is solved with logarithmically many candidate
/// probes; other shapes silently fall back to the exhaustive scan.
pub fn solve_k1(inst: &ParetoInstance, alpha: Alpha, use_dichotomic: bool) -> Result<IntervalClustering> {
    let n = inst.len();
    let cc = if use_dichotomic && front_shape(inst, 0, n - 1)? != FrontShape::Neither {
        cluster_cost_dichotomic_counted(inst, 0, n - 1, alpha)?.0
    } else {
        cluster_cost_naive(inst, 0, n - 1, alpha)?
    };
    IntervalClustering::try_new(n, vec![], vec![cc.medoid], vec![cc.cost], cc.cost)
}

/// Optimal split into two clusters. See [`solve_k2_with_stats`].
pub fn solve_k2(inst: &ParetoInstance, alpha: Alpha, prune: bool) -> Result<IntervalClustering> {
    solve_k2_with_stats(inst, alpha, prune).map(|(c, _)| c)
}

/// Optimal split into two clusters, with work counters.
///
/// Unpruned: one full prefix scan, one full suffix scan, then the best of
/// the `n - 1` splits (smallest split index on exact ties). Pruned: scans
/// grow lazily outward from the middle split and stop in each direction as
/// soon as the one-sided cost alone rules out every remaining split; the
/// replacement rules reproduce the smallest tied split exactly, so both
/// paths return identical clusterings.
pub fn solve_k2_with_stats(
    inst: &ParetoInstance,
    alpha: Alpha,
    prune: bool,
) -> Result<(IntervalClustering, SolveStats)> {
    let n = inst.len();
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, n });
    }
    let (best_j, total, medoids, costs, stats) = if prune {
        solve_k2_pruned(inst, alpha)
    } else {
        let prefix = prefix_costs(inst, alpha, None)?;
        let suffix = suffix_costs(inst, n - 1, alpha, Some(prefix.medoids[n - 1]))?;
        let mut best_j = 0usize;
        let mut best = prefix.costs[0] + suffix.costs[1];
        for j in 1..=n - 2 {
            let t = prefix.costs[j] + suffix.costs[j + 1];
            if t < best {
                best = t;
                best_j = j;
            }
        }
        let stats = SolveStats {
            cost_evals: prefix.evals() + suffix.evals(),
            dp_cells: 0,
            peak_scratch: 2 * (prefix.costs.len() + suffix.costs.len()),
        };
        (
            best_j,
            best,
            [prefix.medoids[best_j], suffix.medoids[best_j + 1]],
            [prefix.costs[best_j], suffix.costs[best_j + 1]],
            stats,
        )
    };
    let clustering = IntervalClustering::try_new(
        n,
        vec![best_j + 1],
        medoids.to_vec(),
        costs.to_vec(),
        total,
    )?;
    Ok((clustering, stats))
}

/// Pruned two-cluster search: seed at the middle split, then walk right
/// while the prefix cost alone stays below the incumbent and left while the
/// suffix cost alone does, replacing on `<` going right and `<=` going left
/// so the smallest tied split always wins.
fn solve_k2_pruned(
    inst: &ParetoInstance,
    alpha: Alpha,
) -> (usize, f64, [usize; 2], [f64; 2], SolveStats) {
    let n = inst.len();
    let mut pre = PrefixScanner::new(inst, alpha, n - 1);
    let mut suf = SuffixScanner::new(inst, alpha, n - 1, 0);
    let j0 = n / 2 - 1;
    while pre.computed() <= j0 {
        pre.advance();
    }
    suf.advance_down_to(j0 + 1);
    let mut best_j = j0;
    let mut best = pre.cost(j0) + suf.cost_at(j0 + 1);
    // Rightward: prefix costs grow with j, so once the prefix alone reaches
    // the incumbent no later split can strictly improve (and later ties
    // lose anyway).
    for j in j0 + 1..=n.saturating_sub(2) {
        while pre.computed() <= j {
            pre.advance();
        }
        let vp = pre.cost(j);
        if vp >= best {
            break;
        }
        let t = vp + suf.cost_at(j + 1);
        if t < best {
            best = t;
            best_j = j;
        }
    }
    // Leftward: suffix costs grow as j shrinks; equal totals replace so the
    // smallest split index is kept.
    for j in (0..j0).rev() {
        suf.advance_down_to(j + 1);
        let vs = suf.cost_at(j + 1);
        if vs > best {
            break;
        }
        let t = pre.cost(j) + vs;
        if t <= best {
            best = t;
            best_j = j;
        }
    }
    let stats = SolveStats {
        cost_evals: pre.evals() + suf.evals(),
        dp_cells: 0,
        peak_scratch: pre.scratch_len() + suf.scratch_len(),
    };
    (
        best_j,
        best,
        [pre.medoid(best_j), suf.medoid_at(best_j + 1)],
        [pre.cost(best_j), suf.cost_at(best_j + 1)],
        stats,
    )
}

/// All two-cluster splits that are local minima of the alternating
/// (reassign-boundary / recenter) heuristic: splits where each boundary
/// point is at least as close to its own cluster's medoid as to the other
/// cluster's. The global optimum always satisfies these conditions, so it
/// appears among the reports.
pub fn local_minima_k2(inst: &ParetoInstance, alpha: Alpha) -> Result<Vec<LocalMinimumReport>> {
    let n = inst.len();
    if n < 2 {
        return Err(Error::TooFewPoints { need: 2, n });
    }
    let prefix = prefix_costs(inst, alpha, None)?;
    let suffix = suffix_costs(inst, n - 1, alpha, Some(prefix.medoids[n - 1]))?;
    let mut out = Vec::new();
    for j in 0..=n - 2 {
        let c_pre = prefix.medoids[j];
        let c_suf = suffix.medoids[j + 1];
        // Nearest-medoid conditions at the boundary; interior points are
        // automatically nearest to their own side on an ordered front.
        let left_ok = dist_sq(inst[j], inst[c_pre]) <= dist_sq(inst[j], inst[c_suf]);
        let right_ok = dist_sq(inst[j + 1], inst[c_suf]) <= dist_sq(inst[j + 1], inst[c_pre]);
        if left_ok && right_ok {
            out.push(LocalMinimumReport {
                split: j,
                prefix_medoid: c_pre,
                suffix_medoid: c_suf,
                total: prefix.costs[j] + suffix.costs[j + 1],
            });
        }
    }
    Ok(out)
}

/// Rows to fill at column `i` (diagonal cells are preset, the last row is
/// only needed at the last column).
fn rows_at_column(k: usize, n: usize, i: usize) -> Vec<usize> {
    let mut rows = Vec::new();
    if k >= 3 {
        let lo = 1usize.max((i + k).saturating_sub(n));
        let hi = (k - 2).min(i - 1);
        rows.extend(lo..=hi);
    }
    if k >= 2 && i == n - 1 && k - 1 <= i {
        // Needs at least one split strictly inside, hence k <= n - 1 here;
        // for k == n the diagonal already holds the answer.
        if k - 1 < i {
            rows.push(k - 1);
        }
    }
    rows
}

struct DpRun {
    table: DpTable,
    prefix: CostScan,
    evals: u64,
    peak_scratch: usize,
}

/// Fills the table column by column. One suffix scan per column serves every
/// row, with candidate windows floored by the whole-prefix medoid.
fn run_dp(inst: &ParetoInstance, k: usize, alpha: Alpha, prune: bool) -> Result<DpRun> {
    let n = inst.len();
    debug_assert!(k >= 1 && k <= n);
    let prefix = prefix_costs(inst, alpha, None)?;
    let mut table = DpTable::new(k, n);
    for i in 0..=n - k {
        table.set(0, i, prefix.costs[i]);
    }
    for t in 0..k {
        table.set(t, t, 0.0);
    }
    let mut evals = prefix.evals();
    let retained = 2 * prefix.costs.len();
    let mut peak_scratch = retained;
    for i in 1..n {
        let rows = rows_at_column(k, n, i);
        if rows.is_empty() {
            continue;
        }
        let mut suf = SuffixScanner::new(inst, alpha, i, prefix.medoids[i]);
        for &t in &rows {
            if prune {
                // Seed with the rightmost split; walk left while the bare
                // suffix cost could still beat the incumbent.
                let mut best = table.get_raw(t - 1, i - 1) + suf.cost_at(i);
                for j in (t - 1..i - 1).rev() {
                    suf.advance_down_to(j + 1);
                    let v = suf.cost_at(j + 1);
                    if v > best {
                        break;
                    }
                    let cand = table.get_raw(t - 1, j) + v;
                    if cand <= best {
                        best = cand;
                    }
                }
                table.set(t, i, best);
            } else {
                suf.advance_down_to(t);
                let mut best = f64::INFINITY;
                for j in t - 1..=i - 1 {
                    let cand = table.get_raw(t - 1, j) + suf.cost_at(j + 1);
                    if cand < best {
                        best = cand;
                    }
                }
                table.set(t, i, best);
            }
        }
        evals += suf.evals();
        peak_scratch = peak_scratch.max(retained + suf.scratch_len());
    }
    Ok(DpRun {
        table,
        prefix,
        evals,
        peak_scratch,
    })
}

/// Recovers the smallest split achieving each table value, right to left.
/// The scans are re-run with the same windows as the forward pass, so the
/// equality tests below are exact.
fn backtrack(
    inst: &ParetoInstance,
    alpha: Alpha,
    run: &DpRun,
) -> (Vec<usize>, u64, usize) {
    let k = run.table.k();
    let n = run.table.n();
    let mut breaks_rev = Vec::with_capacity(k - 1);
    let mut evals = 0u64;
    let mut scratch = 0usize;
    let mut i = n - 1;
    for t in (1..k).rev() {
        let target = run.table.get_raw(t, i);
        let mut suf = SuffixScanner::new(inst, alpha, i, run.prefix.medoids[i]);
        while suf.lowest() > t {
            suf.advance();
            if suf.cost_at(suf.lowest()) > target {
                break;
            }
        }
        let j_start = (t - 1).max(suf.lowest() - 1);
        let mut found = usize::MAX;
        for j in j_start..=i - 1 {
            if run.table.get_raw(t - 1, j) + suf.cost_at(j + 1) == target {
                found = j;
                break;
            }
        }
        assert_ne!(
            found,
            usize::MAX,
            "table value must be reproducible from its own recurrence"
        );
        breaks_rev.push(found + 1);
        evals += suf.evals();
        scratch = scratch.max(suf.scratch_len());
        i = found;
    }
    breaks_rev.reverse();
    (breaks_rev, evals, scratch)
}

/// Exact optimal clustering into `k` contiguous clusters. See
/// [`solve_general_with_stats`].
pub fn solve_general(
    inst: &ParetoInstance,
    k: usize,
    alpha: Alpha,
    prune: bool,
) -> Result<IntervalClustering> {
    solve_general_with_stats(inst, k, alpha, prune).map(|(c, _)| c)
}

/// Exact optimal clustering into `k` contiguous clusters, with work
/// counters. Dispatch: `k == 1` and `k == 2` use the dedicated paths,
/// `k == n` is the zero-cost singleton clustering, everything else runs the
/// full dynamic program plus backtracking.
pub fn solve_general_with_stats(
    inst: &ParetoInstance,
    k: usize,
    alpha: Alpha,
    prune: bool,
) -> Result<(IntervalClustering, SolveStats)> {
    let n = inst.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if k == 1 {
        let c = solve_k1(inst, alpha, false)?;
        let m = n as u64;
        let cost_evals = if n >= 3 { m * (m - 2) } else { (n - 1) as u64 };
        return Ok((
            c,
            SolveStats {
                cost_evals,
                dp_cells: 0,
                peak_scratch: 0,
            },
        ));
    }
    if k == 2 {
        return solve_k2_with_stats(inst, alpha, prune);
    }
    if k == n {
        let c = IntervalClustering::try_new(
            n,
            (1..n).collect(),
            (0..n).collect(),
            vec![0.0; n],
            0.0,
        )?;
        return Ok((c, SolveStats::default()));
    }
    let run = run_dp(inst, k, alpha, prune)?;
    let total = run.table.get_raw(k - 1, n - 1);
    let (breaks, bt_evals, bt_scratch) = backtrack(inst, alpha, &run);
    let mut medoids = Vec::with_capacity(k);
    let mut costs = Vec::with_capacity(k);
    let mut evals = run.evals + bt_evals;
    let clustering = {
        let mut lo = 0usize;
        for hi in breaks.iter().map(|b| b - 1).chain(std::iter::once(n - 1)) {
            let cc = cluster_cost_naive(inst, lo, hi, alpha)?;
            let m = (hi - lo + 1) as u64;
            evals += if m >= 3 { m * (m - 2) } else { m - 1 };
            medoids.push(cc.medoid);
            costs.push(cc.cost);
            lo = hi + 1;
        }
        IntervalClustering::try_new(n, breaks, medoids, costs, total)?
    };
    let stats = SolveStats {
        cost_evals: evals,
        dp_cells: run.table.cells_allocated(),
        peak_scratch: run.peak_scratch.max(2 * n + bt_scratch),
    };
    Ok((clustering, stats))
}

/// The filled table for inspection (any `k` from 1 to `n`).
pub fn dp_table(inst: &ParetoInstance, k: usize, alpha: Alpha, prune: bool) -> Result<DpTable> {
    let n = inst.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(run_dp(inst, k, alpha, prune)?.table)
}

/// Recomputes the objective of a clustering from scratch with the
/// exhaustive per-cluster evaluation — the audit path used to cross-check
/// solver outputs.
pub fn objective_of(
    inst: &ParetoInstance,
    clustering: &IntervalClustering,
    alpha: Alpha,
) -> Result<f64> {
    if clustering.n() != inst.len() {
        return Err(Error::MalformedPartition(format!(
            "clustering over {} points applied to an instance of {}",
            clustering.n(),
            inst.len()
        )));
    }
    let mut total = 0.0;
    for (lo, hi) in clustering.ranges() {
        total += cluster_cost_naive(inst, lo, hi, alpha)?.cost;
    }
    Ok(total)
}
