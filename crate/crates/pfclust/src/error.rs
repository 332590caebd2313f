//! Error taxonomy shared by every operation in the crate.

use thiserror::Error;

/// All failure modes surfaced by the library.
///
/// Guard errors ([`Error::TooManyCandidates`], [`Error::InstanceTooLarge`])
/// indicate that an exhaustive baseline was asked to enumerate more work than
/// its safety cap allows; they never occur on the polynomial solver paths.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// No points were supplied.
    #[error("input contains no points")]
    EmptyInput,

    /// Validation of a claimed Pareto front failed. The witness holds the
    /// positions (0-based, in x1-sorted order) of an offending pair: either
    /// the first coordinates are not strictly increasing or the second
    /// coordinates are not strictly decreasing at this pair.
    #[error("points {i} and {j} (0-based, sorted by first coordinate) violate the strict Pareto-front ordering")]
    NotAParetoFront { i: usize, j: usize },

    /// A coordinate was NaN or infinite.
    #[error("point {index} has a non-finite coordinate")]
    NonFiniteCoordinate { index: usize },

    /// The distance exponent must be strictly positive (and finite).
    #[error("distance exponent must be a positive finite number, got {0}")]
    NonPositiveAlpha(f64),

    /// An interval endpoint or center index lies outside the instance.
    #[error("index range [{lo}, {hi}] is invalid for an instance of {n} points")]
    IndexOutOfRange { lo: usize, hi: usize, n: usize },

    /// A caller-supplied medoid bound lies outside the instance.
    #[error("center bound {bound} is invalid for an instance of {n} points")]
    InvalidBound { bound: usize, n: usize },

    /// The operation needs more points than the instance has.
    #[error("operation needs at least {need} points, instance has {n}")]
    TooFewPoints { need: usize, n: usize },

    /// The requested number of clusters cannot be realized.
    #[error("cluster count {k} is out of range for an instance of {n} points")]
    KOutOfRange { k: usize, n: usize },

    /// A partition handed to an audit routine does not cover the instance
    /// with disjoint, well-formed clusters.
    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    /// The split enumerator would have to visit more candidates than its cap.
    #[error("exhaustive split enumeration would visit {candidates} candidates (cap {cap})")]
    TooManyCandidates { candidates: u128, cap: u128 },

    /// The set-partition enumerator only runs on desk-scale instances.
    #[error("set-partition enumeration is capped at n <= {max_n}, k <= {max_k} (got n = {n}, k = {k})")]
    InstanceTooLarge {
        n: usize,
        k: usize,
        max_n: usize,
        max_k: usize,
    },
}
