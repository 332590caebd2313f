//! Command-line front end: input parsing, solver dispatch, structured
//! output, benchmarking, and plot emission.
//!
//! Everything user-facing is 1-based and mirrors the report schema of the
//! core library. Failures map to three exit classes: usage errors (1), data
//! errors (2), and solver guards (3).

pub mod bench;
pub mod io;
pub mod plot;

use std::fmt;
use std::fs;

use clap::ValueEnum;
use pfclust::{
    brute_force_interval, brute_force_partitions, local_minima_k2, pam_heuristic, solve_general,
    Alpha, IntervalClustering, MinimaReport, ParetoInstance, SolveReport,
};

/// Iteration cap for the alternating heuristic when driven from the CLI.
pub const PAM_MAX_ITERS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// The exact solver with its built-in fast paths (same as `dp`).
    Auto,
    /// Exact dynamic program.
    Dp,
    /// Exhaustive enumeration of contiguous clusterings (guarded).
    BruteInterval,
    /// Exhaustive enumeration of arbitrary partitions (guarded).
    BruteAll,
    /// Seeded alternating heuristic.
    Pam,
    /// Enumerate all locally optimal two-cluster splits (requires k = 2).
    LocalMinima,
}

impl Algorithm {
    /// Name echoed in reports.
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Auto | Algorithm::Dp => "dp",
            Algorithm::BruteInterval => "brute-interval",
            Algorithm::BruteAll => "brute-all",
            Algorithm::Pam => "pam",
            Algorithm::LocalMinima => "local-minima",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// One solve invocation, fully specified.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Points file; `-` reads stdin.
    pub input_path: String,
    pub k: usize,
    pub alpha: f64,
    pub algorithm: Algorithm,
    pub prune: bool,
    /// Trust the input to be a strict front (error on violations) instead
    /// of extracting the non-dominated subset.
    pub assume_front: bool,
    /// Worker threads for the solver kernels; 0 = available parallelism.
    /// Results are byte-identical either way.
    pub workers: usize,
    pub seed: u64,
    pub output_format: OutputFormat,
    /// Write the rendered report here instead of stdout.
    pub out_path: Option<String>,
    /// Also emit an SVG scatter of the clustering.
    pub plot_path: Option<String>,
}

/// Error classes, one per exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Exit 1: the invocation itself is invalid.
    Usage(String),
    /// Exit 2: the input cannot be read or is not a valid front.
    Data(String),
    /// Exit 3: a solver guard refused the (instance, k) combination.
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Guard(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.message())
    }
}

impl std::error::Error for CliError {}

/// Maps library errors onto exit classes.
fn classify(err: pfclust::Error) -> CliError {
    use pfclust::Error;
    let msg = err.to_string();
    match err {
        Error::EmptyInput | Error::NotAParetoFront { .. } | Error::NonFiniteCoordinate { .. } => {
            CliError::Data(msg)
        }
        Error::NonPositiveAlpha(_) => CliError::Usage(msg),
        Error::KOutOfRange { .. }
        | Error::TooFewPoints { .. }
        | Error::TooManyCandidates { .. }
        | Error::InstanceTooLarge { .. }
        | Error::IndexOutOfRange { .. }
        | Error::InvalidBound { .. }
        | Error::MalformedPartition(_) => CliError::Guard(msg),
    }
}

/// Everything a run produces, before any file is written.
#[derive(Debug, Clone)]
pub struct Artifacts {
    pub rendered: String,
    pub plot_svg: Option<String>,
}

fn labels_of(c: &IntervalClustering) -> (Vec<usize>, Vec<usize>) {
    let mut labels = vec![0usize; c.n()];
    for (l, (lo, hi)) in c.ranges().into_iter().enumerate() {
        for item in labels.iter_mut().take(hi + 1).skip(lo) {
            *item = l;
        }
    }
    (labels, c.medoids().to_vec())
}

fn render(report: &SolveReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    }
}

type Solved = (String, Option<(Vec<usize>, Vec<usize>)>);

fn dispatch(inst: &ParetoInstance, alpha: Alpha, config: &RunConfig) -> Result<Solved, CliError> {
    let label = config.algorithm.label();
    match config.algorithm {
        Algorithm::Auto | Algorithm::Dp => {
            let c = solve_general(inst, config.k, alpha, config.prune).map_err(classify)?;
            let report = SolveReport::from_clustering(inst, alpha, label, &c);
            Ok((render(&report, config.output_format), Some(labels_of(&c))))
        }
        Algorithm::BruteInterval => {
            let c = brute_force_interval(inst, config.k, alpha).map_err(classify)?;
            let report = SolveReport::from_clustering(inst, alpha, label, &c);
            Ok((render(&report, config.output_format), Some(labels_of(&c))))
        }
        Algorithm::BruteAll => {
            let (cand, _interval) =
                brute_force_partitions(inst, config.k, alpha).map_err(classify)?;
            let report = SolveReport::from_candidate(inst, alpha, label, &cand);
            Ok((
                render(&report, config.output_format),
                Some((cand.assignment, cand.medoids)),
            ))
        }
        Algorithm::Pam => {
            let (cand, _converged) =
                pam_heuristic(inst, config.k, alpha, config.seed, PAM_MAX_ITERS)
                    .map_err(classify)?;
            let report = SolveReport::from_candidate(inst, alpha, label, &cand);
            Ok((
                render(&report, config.output_format),
                Some((cand.assignment, cand.medoids)),
            ))
        }
        Algorithm::LocalMinima => {
            let minima = local_minima_k2(inst, alpha).map_err(classify)?;
            let report = MinimaReport::new(inst.len(), alpha, &minima);
            let rendered = match config.output_format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Csv => report.to_csv(),
            };
            Ok((rendered, None))
        }
    }
}

/// Validates the configuration, solves, and renders — without touching the
/// filesystem (the testable core of [`run`]).
pub fn execute(config: &RunConfig) -> Result<Artifacts, CliError> {
    if config.k == 0 {
        return Err(CliError::Usage("--k must be at least 1".into()));
    }
    let alpha = Alpha::new(config.alpha).map_err(classify)?;
    if config.algorithm == Algorithm::LocalMinima {
        if config.k != 2 {
            return Err(CliError::Usage(
                "--algorithm local-minima requires --k 2".into(),
            ));
        }
        if config.plot_path.is_some() {
            return Err(CliError::Usage(
                "--plot is not available with --algorithm local-minima".into(),
            ));
        }
    }
    let text = io::read_input(&config.input_path)?;
    let points = io::parse_points(&text)?;
    let inst = ParetoInstance::build(&points, config.assume_front).map_err(classify)?;
    let work = || dispatch(&inst, alpha, config);
    let (rendered, labels) = if config.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| {
                CliError::Usage(format!(
                    "cannot build a pool of {} workers: {e}",
                    config.workers
                ))
            })?;
        pool.install(work)?
    } else {
        work()?
    };
    let plot_svg = match (&config.plot_path, labels) {
        (Some(_), Some((labels, medoids))) => Some(plot::render_svg(&inst, &labels, &medoids)),
        _ => None,
    };
    Ok(Artifacts {
        rendered,
        plot_svg,
    })
}

/// Full run: solve and write the artifacts (report to `--out` or stdout,
/// plot to its path).
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let artifacts = execute(config)?;
    match &config.out_path {
        Some(path) => fs::write(path, &artifacts.rendered)
            .map_err(|e| CliError::Data(format!("cannot write {path}: {e}")))?,
        None => print!("{}", artifacts.rendered),
    }
    if let (Some(path), Some(svg)) = (&config.plot_path, &artifacts.plot_svg) {
        fs::write(path, svg).map_err(|e| CliError::Data(format!("cannot write {path}: {e}")))?;
    }
    Ok(())
}
