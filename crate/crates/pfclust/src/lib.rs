//! Exact clustering of 2-d Pareto fronts.
//!
//! Points on a front in canonical order (first coordinate strictly
//! increasing, second strictly decreasing) admit optimal clusterings made of
//! contiguous index ranges. This crate provides exact polynomial solvers for
//! the sum-of-powered-distances-to-medoid objective (power 1 = classic
//! k-median, power 2 = squared k-medoids, any positive power supported),
//! together with brute-force reference oracles, a PAM-style alternating
//! heuristic baseline, and deterministic instance generators.
//!
//! All library indices are 0-based; rendering layers may present 1-based
//! ones.

pub mod costs;
pub mod error;
pub mod oracle;
pub mod pareto;
pub mod report;
pub mod solver;
pub mod synth;

pub use costs::{
    cluster_cost_dichotomic, cluster_cost_dichotomic_counted, cluster_cost_naive, front_shape,
    prefix_costs, suffix_costs, ClusterCost, CostScan, FrontShape, ScanDirection,
};
pub use error::Error;
pub use oracle::{
    brute_force_interval, brute_force_partitions, find_non_unimodal_witness, is_local_minimum,
    pam_from_medoids, pam_heuristic, NonUnimodalWitness, PartitionCandidate,
};
pub use pareto::{
    dist_pow, dominates, extract_front, incomparable, Alpha, ParetoInstance, Point2,
};
pub use report::{ClusterReport, MinimaReport, MinimumEntry, SolveReport};
pub use solver::{
    dp_table, local_minima_k2, objective_of, solve_general, solve_general_with_stats, solve_k1,
    solve_k2, solve_k2_with_stats, DpTable, IntervalClustering, LocalMinimumReport, SolveStats,
};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
