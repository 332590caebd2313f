//! Serializable run reports.
//!
//! Reports present **1-based** inclusive indices (the library itself is
//! 0-based throughout). Serialization is deterministic: struct field order,
//! shortest-round-trip float formatting, `\n` line endings.

use serde::Serialize;

use crate::oracle::PartitionCandidate;
use crate::pareto::{dist_pow, Alpha, ParetoInstance};
use crate::solver::{IntervalClustering, LocalMinimumReport};

/// One cluster of a solve, 1-based inclusive `from..=to`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterReport {
    pub from: usize,
    pub to: usize,
    pub medoid: usize,
    pub medoid_x1: f64,
    pub medoid_x2: f64,
    pub cost: f64,
}

/// Full result of one clustering run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    pub algorithm: String,
    pub total_cost: f64,
    /// Whether the clusters are contiguous index ranges (always true for
    /// the exact solvers; the heuristic can produce non-contiguous ones).
    pub interval: bool,
    /// Last (1-based) index of every cluster but the final one.
    pub breaks: Vec<usize>,
    pub clusters: Vec<ClusterReport>,
}

impl SolveReport {
    pub fn from_clustering(
        inst: &ParetoInstance,
        alpha: Alpha,
        algorithm: &str,
        c: &IntervalClustering,
    ) -> Self {
        let clusters = c
            .ranges()
            .into_iter()
            .zip(c.medoids().iter().zip(c.cluster_costs()))
            .map(|((lo, hi), (&m, &cost))| ClusterReport {
                from: lo + 1,
                to: hi + 1,
                medoid: m + 1,
                medoid_x1: inst[m].x1,
                medoid_x2: inst[m].x2,
                cost,
            })
            .collect();
        SolveReport {
            n: c.n(),
            k: c.k(),
            alpha: alpha.value(),
            algorithm: algorithm.to_string(),
            total_cost: c.total(),
            interval: true,
            breaks: c.breaks().to_vec(),
            clusters,
        }
    }

    /// A free-form candidate rendered in the same schema. `from`/`to` are
    /// the extremes of each label's members; `breaks` stays empty unless
    /// the candidate is contiguous.
    pub fn from_candidate(
        inst: &ParetoInstance,
        alpha: Alpha,
        algorithm: &str,
        cand: &PartitionCandidate,
    ) -> Self {
        let n = cand.assignment.len();
        let k = cand.k();
        let interval = cand.is_interval();
        let mut clusters = Vec::with_capacity(k);
        for (l, &m) in cand.medoids.iter().enumerate() {
            let members: Vec<usize> = (0..n).filter(|&i| cand.assignment[i] == l).collect();
            let cost: f64 = members
                .iter()
                .map(|&i| dist_pow(inst[i], inst[m], alpha))
                .sum();
            clusters.push(ClusterReport {
                from: members.first().map_or(0, |&i| i + 1),
                to: members.last().map_or(0, |&i| i + 1),
                medoid: m + 1,
                medoid_x1: inst[m].x1,
                medoid_x2: inst[m].x2,
                cost,
            });
        }
        let breaks = if interval {
            let mut b: Vec<usize> = clusters.iter().map(|c| c.to).collect();
            b.sort_unstable();
            b.pop();
            b
        } else {
            vec![]
        };
        SolveReport {
            n,
            k,
            alpha: alpha.value(),
            algorithm: algorithm.to_string(),
            total_cost: cand.total,
            interval,
            breaks,
            clusters,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per cluster, run metadata repeated on every row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "cluster,from,to,medoid,medoid_x1,medoid_x2,cost,total_cost,n,k,alpha,interval,algorithm\n",
        );
        for (idx, c) in self.clusters.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                idx + 1,
                c.from,
                c.to,
                c.medoid,
                c.medoid_x1,
                c.medoid_x2,
                c.cost,
                self.total_cost,
                self.n,
                self.k,
                self.alpha,
                self.interval,
                self.algorithm
            ));
        }
        out
    }
}

/// One locally optimal two-cluster split, 1-based: `split` is the last
/// index of the first cluster.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimumEntry {
    pub split: usize,
    pub prefix_medoid: usize,
    pub suffix_medoid: usize,
    pub total: f64,
}

/// All locally optimal two-cluster splits of an instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimaReport {
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    pub algorithm: String,
    pub count: usize,
    pub minima: Vec<MinimumEntry>,
}

impl MinimaReport {
    pub fn new(n: usize, alpha: Alpha, reports: &[LocalMinimumReport]) -> Self {
        let minima: Vec<MinimumEntry> = reports
            .iter()
            .map(|r| MinimumEntry {
                split: r.split + 1,
                prefix_medoid: r.prefix_medoid + 1,
                suffix_medoid: r.suffix_medoid + 1,
                total: r.total,
            })
            .collect();
        MinimaReport {
            n,
            k: 2,
            alpha: alpha.value(),
            algorithm: "local-minima".to_string(),
            count: minima.len(),
            minima,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("split,prefix_medoid,suffix_medoid,total,n,alpha\n");
        for m in &self.minima {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                m.split, m.prefix_medoid, m.suffix_medoid, m.total, self.n, self.alpha
            ));
        }
        out
    }
}
