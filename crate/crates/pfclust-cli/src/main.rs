use std::fs;
use std::process;

use clap::{Args, Parser, Subcommand};

use pfclust_cli::bench::{bench, BenchConfig, GenKind};
use pfclust_cli::{io, run, Algorithm, CliError, OutputFormat, RunConfig};

/// Exact clustering of 2-d Pareto fronts (k-median, k-medoids, and any
/// positive distance power).
#[derive(Parser)]
#[command(name = "pfclust", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster a points file and emit a structured report.
    Solve(SolveArgs),
    /// Time solvers over a grid of synthetic instances, with identity checks.
    Bench(BenchArgs),
    /// Generate a synthetic front as a points file.
    Gen(GenArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Points file, one "x,y" per line; "-" reads stdin.
    input: String,
    /// Number of clusters.
    #[arg(short, long)]
    k: usize,
    /// Distance power (1 = k-median, 2 = squared k-medoids).
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    /// Keep split-point pruning on (the default).
    #[arg(long, overrides_with = "no_prune")]
    prune: bool,
    /// Disable split-point pruning (same results, more work).
    #[arg(long)]
    no_prune: bool,
    /// Error on dominated points instead of dropping them.
    #[arg(long)]
    assume_front: bool,
    /// Worker threads (0 = available parallelism); output bytes are
    /// identical for any value.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Seed for the pam heuristic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Also write an SVG scatter of the clustering.
    #[arg(long)]
    plot: Option<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance family for the grid cells.
    #[arg(long, value_enum, default_value_t = GenKind::Random)]
    kind: GenKind,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', default_value = "200,400")]
    sizes: Vec<usize>,
    /// Comma-separated cluster counts.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    ks: Vec<usize>,
    /// Comma-separated distance powers.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    alphas: Vec<f64>,
    /// Timed repetitions per cell (median reported).
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    #[arg(long, overrides_with = "no_prune")]
    prune: bool,
    #[arg(long)]
    no_prune: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    /// Instance family.
    #[arg(long, value_enum, default_value_t = GenKind::Random)]
    kind: GenKind,
    /// Number of points.
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the points here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

fn write_output(path: Option<&str>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            fs::write(p, content).map_err(|e| CliError::Data(format!("cannot write {p}: {e}")))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run_solve(args: SolveArgs) -> Result<(), CliError> {
    let config = RunConfig {
        input_path: args.input,
        k: args.k,
        alpha: args.alpha,
        algorithm: args.algorithm,
        prune: !args.no_prune,
        assume_front: args.assume_front,
        workers: args.workers,
        seed: args.seed,
        output_format: args.format,
        out_path: args.out,
        plot_path: args.plot,
    };
    run(&config)
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let config = BenchConfig {
        kind: args.kind,
        sizes: args.sizes,
        ks: args.ks,
        alphas: args.alphas,
        reps: args.reps,
        algorithm: args.algorithm,
        prune: !args.no_prune,
        seed: args.seed,
    };
    let csv = bench(&config)?;
    write_output(args.out.as_deref(), &csv)
}

fn run_gen(args: GenArgs) -> Result<(), CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let inst = args
        .kind
        .generate(args.n, args.seed)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(args.out.as_deref(), &io::write_points(inst.points()))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                process::exit(0);
            }
            let _ = e.print();
            process::exit(1);
        }
    };
    let result = match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench(args),
        Command::Gen(args) => run_gen(args),
    };
    if let Err(e) = result {
        eprintln!("error: {}", e.message());
        process::exit(e.exit_code());
    }
}
