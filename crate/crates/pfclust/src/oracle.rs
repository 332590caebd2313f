//! Independent reference implementations used to cross-check the solvers,
//! plus the alternating-heuristic baseline they are compared against.
//!
//! Everything here is deliberately simple and exhaustively evaluated; guards
//! keep the enumeration sizes sane. None of this code shares logic with the
//! incremental scans in [`crate::costs`] or the dynamic program in
//! [`crate::solver`], which is the point.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::costs::{center_cost, cluster_cost_naive, ClusterCost};
use crate::pareto::{dist_pow, dist_sq, Alpha, ParetoInstance, Point2};
use crate::solver::IntervalClustering;
use crate::{Error, Result};

/// Hard cap on the number of break placements [`brute_force_interval`] will
/// enumerate.
pub const INTERVAL_ENUM_CAP: u128 = 10_000_000;

/// Size guards for [`brute_force_partitions`].
pub const PARTITION_MAX_N: usize = 12;
pub const PARTITION_MAX_K: usize = 4;

/// An arbitrary (not necessarily contiguous) clustering: a label per point,
/// one medoid per label, and the summed powered distances to the medoids.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionCandidate {
    /// `assignment[i]` is the cluster label of point `i`, labels `0..k` in
    /// order of first appearance.
    pub assignment: Vec<usize>,
    /// `medoids[l]` is the medoid of label `l`.
    pub medoids: Vec<usize>,
    pub total: f64,
}

impl PartitionCandidate {
    pub fn k(&self) -> usize {
        self.medoids.len()
    }

    /// True when every label occupies one contiguous index range.
    pub fn is_interval(&self) -> bool {
        let k = self.k();
        let n = self.assignment.len();
        let mut min_i = vec![usize::MAX; k];
        let mut max_i = vec![0usize; k];
        let mut count = vec![0usize; k];
        for (i, &l) in self.assignment.iter().enumerate() {
            if l >= k {
                return false;
            }
            min_i[l] = min_i[l].min(i);
            max_i[l] = max_i[l].max(i);
            count[l] += 1;
        }
        (0..k).all(|l| count[l] > 0 && max_i[l] - min_i[l] + 1 == count[l]) && n > 0
    }

    /// View of an interval clustering as a candidate.
    pub fn from_intervals(c: &IntervalClustering) -> Self {
        let mut assignment = vec![0usize; c.n()];
        for (l, (lo, hi)) in c.ranges().into_iter().enumerate() {
            for item in assignment.iter_mut().take(hi + 1).skip(lo) {
                *item = l;
            }
        }
        PartitionCandidate {
            assignment,
            medoids: c.medoids().to_vec(),
            total: c.total(),
        }
    }
}

/// `C(n, k)` saturating just above `cap` (exact below it).
fn binomial_capped(n: u64, k: u64, cap: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
        if acc > cap {
            return cap + 1;
        }
    }
    acc
}

struct IntervalEnum<'a> {
    inst: &'a ParetoInstance,
    alpha: Alpha,
    k: usize,
    n: usize,
    memo: HashMap<(usize, usize), ClusterCost>,
    breaks_buf: Vec<usize>,
    best: Option<(f64, Vec<usize>)>,
}

impl<'a> IntervalEnum<'a> {
    fn cost(&mut self, lo: usize, hi: usize) -> ClusterCost {
        if let Some(&c) = self.memo.get(&(lo, hi)) {
            return c;
        }
        let c = cluster_cost_naive(self.inst, lo, hi, self.alpha)
            .expect("enumerated range is always valid");
        self.memo.insert((lo, hi), c);
        c
    }

    fn recurse(&mut self, start: usize, cluster: usize, running: f64) {
        if cluster == self.k - 1 {
            let total = running + self.cost(start, self.n - 1).cost;
            // Strict improvement only: enumeration is lexicographic, so the
            // first-found total survives ties and the smallest break
            // sequence wins.
            if self.best.as_ref().is_none_or(|(b, _)| total < *b) {
                self.best = Some((total, self.breaks_buf.clone()));
            }
            return;
        }
        let remaining = self.k - 1 - cluster;
        for b in start + 1..=self.n - remaining {
            let partial = running + self.cost(start, b - 1).cost;
            self.breaks_buf.push(b);
            self.recurse(b, cluster + 1, partial);
            self.breaks_buf.pop();
        }
    }
}

/// Reference solver: enumerate every placement of `k - 1` breaks, evaluate
/// each contiguous clustering exhaustively, keep the best (smallest break
/// sequence on exact ties). Errors with [`Error::TooManyCandidates`] above
/// [`INTERVAL_ENUM_CAP`] placements.
pub fn brute_force_interval(
    inst: &ParetoInstance,
    k: usize,
    alpha: Alpha,
) -> Result<IntervalClustering> {
    let n = inst.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let candidates = binomial_capped((n - 1) as u64, (k - 1) as u64, INTERVAL_ENUM_CAP);
    if candidates > INTERVAL_ENUM_CAP {
        return Err(Error::TooManyCandidates {
            candidates,
            cap: INTERVAL_ENUM_CAP,
        });
    }
    let mut e = IntervalEnum {
        inst,
        alpha,
        k,
        n,
        memo: HashMap::new(),
        breaks_buf: Vec::with_capacity(k - 1),
        best: None,
    };
    e.recurse(0, 0, 0.0);
    let (total, breaks) = e.best.take().expect("at least one placement exists");
    let mut medoids = Vec::with_capacity(k);
    let mut costs = Vec::with_capacity(k);
    let mut lo = 0usize;
    for hi in breaks.iter().map(|b| b - 1).chain(std::iter::once(n - 1)) {
        let cc = e.cost(lo, hi);
        medoids.push(cc.medoid);
        costs.push(cc.cost);
        lo = hi + 1;
    }
    IntervalClustering::try_new(n, breaks, medoids, costs, total)
}

struct PartitionEnum<'a> {
    dist: &'a [Vec<f64>],
    n: usize,
    k: usize,
    labels: Vec<usize>,
    best: Option<(f64, bool, Vec<usize>, Vec<usize>)>,
}

impl PartitionEnum<'_> {
    fn evaluate(&mut self) {
        let mut medoids = Vec::with_capacity(self.k);
        let mut total = 0.0;
        for l in 0..self.k {
            let members: Vec<usize> = (0..self.n).filter(|&i| self.labels[i] == l).collect();
            let mut best_c = members[0];
            let mut best_v = f64::INFINITY;
            for &c in &members {
                let v: f64 = members.iter().map(|&m| self.dist[m][c]).sum();
                if v < best_v {
                    best_v = v;
                    best_c = c;
                }
            }
            medoids.push(best_c);
            total += best_v;
        }
        let interval = {
            let mut ok = true;
            let mut seen_max = vec![false; self.k];
            let mut prev = usize::MAX;
            for &l in &self.labels {
                if l != prev {
                    if seen_max[l] {
                        ok = false;
                        break;
                    }
                    seen_max[l] = true;
                    prev = l;
                }
            }
            ok
        };
        let replace = match &self.best {
            None => true,
            Some((bt, bi, _, _)) => total < *bt || (total == *bt && interval && !*bi),
        };
        if replace {
            self.best = Some((total, interval, self.labels.clone(), medoids));
        }
    }

    fn recurse(&mut self, i: usize, used: usize) {
        if i == self.n {
            if used == self.k {
                self.evaluate();
            }
            return;
        }
        let max_label = if used < self.k { used } else { used - 1 };
        for lab in 0..=max_label {
            let new_used = used.max(lab + 1);
            // Enough positions must remain to open all missing labels.
            if new_used + (self.n - i - 1) >= self.k {
                self.labels[i] = lab;
                self.recurse(i + 1, new_used);
            }
        }
    }
}

/// Reference for the interval-optimality claim: enumerate *every* partition
/// of the points into `k` nonempty clusters — contiguous or not — in
/// canonical label order, with exact medoids per cluster. Returns the best
/// candidate and whether it is contiguous (among tied bests, a contiguous
/// one is preferred so the boolean answers "does some optimal partition use
/// intervals"). Guarded to `n <= 12`, `k <= 4`.
pub fn brute_force_partitions(
    inst: &ParetoInstance,
    k: usize,
    alpha: Alpha,
) -> Result<(PartitionCandidate, bool)> {
    let n = inst.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    if n > PARTITION_MAX_N || k > PARTITION_MAX_K {
        return Err(Error::InstanceTooLarge {
            n,
            k,
            max_n: PARTITION_MAX_N,
            max_k: PARTITION_MAX_K,
        });
    }
    let dist: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| dist_pow(inst[i], inst[j], alpha)).collect())
        .collect();
    let mut e = PartitionEnum {
        dist: &dist,
        n,
        k,
        labels: vec![0; n],
        best: None,
    };
    e.recurse(0, 0);
    let (total, interval, assignment, medoids) = e.best.expect("k <= n guarantees a partition");
    Ok((
        PartitionCandidate {
            assignment,
            medoids,
            total,
        },
        interval,
    ))
}

/// Alternating heuristic from random seeds: sample `k` distinct medoids
/// (partial Fisher–Yates over a ChaCha8 stream, so runs are reproducible
/// from the seed on every platform), then alternate
/// assign-to-nearest-medoid / recenter-each-cluster until the medoid set is
/// stable or `max_iters` passes elapse. Returns the candidate and whether a
/// fixed point was reached.
pub fn pam_heuristic(
    inst: &ParetoInstance,
    k: usize,
    alpha: Alpha,
    seed: u64,
    max_iters: usize,
) -> Result<(PartitionCandidate, bool)> {
    let n = inst.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        idx.swap(i, j);
    }
    let mut seeds = idx[..k].to_vec();
    seeds.sort_unstable();
    pam_from_medoids(inst, &seeds, alpha, max_iters)
}

/// The alternation of [`pam_heuristic`] from explicit starting medoids.
///
/// Ties in assignment go to the smallest medoid index; recentering picks the
/// smallest-index exact medoid of each cluster. Both steps are
/// deterministic, so the whole run is a pure function of the seeds.
pub fn pam_from_medoids(
    inst: &ParetoInstance,
    seed_medoids: &[usize],
    alpha: Alpha,
    max_iters: usize,
) -> Result<(PartitionCandidate, bool)> {
    let n = inst.len();
    let k = seed_medoids.len();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut meds = seed_medoids.to_vec();
    meds.sort_unstable();
    if *meds.last().unwrap() >= n {
        let bad = *meds.last().unwrap();
        return Err(Error::IndexOutOfRange {
            lo: bad,
            hi: bad,
            n,
        });
    }
    if meds.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::MalformedPartition(
            "seed medoids must be distinct".into(),
        ));
    }
    let assign = |meds: &[usize], assignment: &mut Vec<usize>| {
        for i in 0..n {
            let mut best_l = 0usize;
            let mut best_d = dist_sq(inst[i], inst[meds[0]]);
            for (l, &m) in meds.iter().enumerate().skip(1) {
                let d = dist_sq(inst[i], inst[m]);
                if d < best_d {
                    best_d = d;
                    best_l = l;
                }
            }
            assignment[i] = best_l;
        }
    };
    let mut assignment = vec![0usize; n];
    let mut converged = false;
    for _ in 0..max_iters {
        assign(&meds, &mut assignment);
        let mut new_meds = Vec::with_capacity(k);
        for l in 0..k {
            let members: Vec<usize> = (0..n).filter(|&i| assignment[i] == l).collect();
            debug_assert!(!members.is_empty(), "a medoid always claims itself");
            let mut best_c = members[0];
            let mut best_v = f64::INFINITY;
            for &c in &members {
                let v: f64 = members
                    .iter()
                    .map(|&m| dist_pow(inst[m], inst[c], alpha))
                    .sum();
                if v < best_v {
                    best_v = v;
                    best_c = c;
                }
            }
            new_meds.push(best_c);
        }
        new_meds.sort_unstable();
        if new_meds == meds {
            converged = true;
            break;
        }
        meds = new_meds;
    }
    assign(&meds, &mut assignment);
    let total = (0..n)
        .map(|i| dist_pow(inst[i], inst[meds[assignment[i]]], alpha))
        .sum();
    Ok((
        PartitionCandidate {
            assignment,
            medoids: meds,
            total,
        },
        converged,
    ))
}

/// True when the candidate is a fixed point of the alternation: every
/// cluster's stored medoid admits no strictly better member, and every
/// point is at least as close to its own medoid as to any other.
/// Malformed candidates (empty clusters, out-of-range labels, a medoid
/// outside its own cluster) are errors, not `false`.
pub fn is_local_minimum(
    inst: &ParetoInstance,
    cand: &PartitionCandidate,
    alpha: Alpha,
) -> Result<bool> {
    let n = inst.len();
    let k = cand.k();
    if cand.assignment.len() != n {
        return Err(Error::MalformedPartition(format!(
            "assignment covers {} points, instance has {n}",
            cand.assignment.len()
        )));
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let mut counts = vec![0usize; k];
    for &l in &cand.assignment {
        if l >= k {
            return Err(Error::MalformedPartition(format!(
                "label {l} out of range for k = {k}"
            )));
        }
        counts[l] += 1;
    }
    if let Some(l) = counts.iter().position(|&c| c == 0) {
        return Err(Error::MalformedPartition(format!("cluster {l} is empty")));
    }
    for (l, &m) in cand.medoids.iter().enumerate() {
        if m >= n || cand.assignment[m] != l {
            return Err(Error::MalformedPartition(format!(
                "medoid {m} does not belong to cluster {l}"
            )));
        }
    }
    for l in 0..k {
        let members: Vec<usize> = (0..n).filter(|&i| cand.assignment[i] == l).collect();
        let med = cand.medoids[l];
        let med_cost: f64 = members
            .iter()
            .map(|&m| dist_pow(inst[m], inst[med], alpha))
            .sum();
        for &c in &members {
            let v: f64 = members
                .iter()
                .map(|&m| dist_pow(inst[m], inst[c], alpha))
                .sum();
            if v < med_cost {
                return Ok(false);
            }
        }
    }
    for i in 0..n {
        let own = dist_sq(inst[i], inst[cand.medoids[cand.assignment[i]]]);
        for &m in &cand.medoids {
            if dist_sq(inst[i], inst[m]) < own {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A front on which the whole-front candidate-center cost sequence has a
/// strict interior local maximum — evidence that the sequence is not
/// unimodal in general, so bisection over centers needs the shape
/// precondition.
#[derive(Debug, Clone)]
pub struct NonUnimodalWitness {
    pub instance: ParetoInstance,
    pub alpha: Alpha,
    /// Candidate index `j` with `cost(j-1) < cost(j) > cost(j+1)`.
    pub peak: usize,
}

/// Randomized search for a [`NonUnimodalWitness`] over small fronts
/// (5 to 8 points) with powers 1 and 2, trying several gap distributions.
/// Deterministic in `seed`; returns `None` if `max_trials` instances all
/// have unimodal sequences.
pub fn find_non_unimodal_witness(max_trials: u64, seed: u64) -> Option<NonUnimodalWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..max_trials {
        let n = rng.gen_range(5usize..=8);
        let style = trial % 3;
        let gap = |rng: &mut ChaCha8Rng| -> f64 {
            match style {
                0 => rng.gen_range(0.05..1.0),
                // Heavy-tailed gaps: mostly tiny, occasionally huge.
                1 => {
                    let u: f64 = rng.gen_range(0.0..1.0);
                    10.0 * u.powi(4) + 1e-3
                }
                _ => rng.gen_range(-5.0f64..2.0).exp(),
            }
        };
        let mut x1 = 0.0f64;
        let mut x2 = 0.0f64;
        let mut raw = Vec::with_capacity(n);
        for _ in 0..n {
            x1 += gap(&mut rng);
            x2 += gap(&mut rng);
            raw.push((x1, x2));
        }
        let top = x2 + 1.0;
        let pts: Vec<Point2> = raw
            .into_iter()
            .map(|(a, b)| Point2::new(a, top - b))
            .collect();
        let Ok(inst) = ParetoInstance::build(&pts, true) else {
            continue;
        };
        for av in [1.0, 2.0] {
            let alpha = Alpha::new(av).expect("constant is positive");
            let costs: Vec<f64> = (0..n)
                .map(|c| center_cost(&inst, 0, n - 1, c, alpha))
                .collect();
            for j in 1..n - 1 {
                if costs[j - 1] < costs[j] && costs[j] > costs[j + 1] {
                    return Some(NonUnimodalWitness {
                        instance: inst,
                        alpha,
                        peak: j,
                    });
                }
            }
        }
    }
    None
}
