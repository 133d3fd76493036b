//! Thin command-line front end over the library pipeline: `build` the
//! graph artifacts from a corpus, report `stats`, and `rank` authors.

use clap::{Args, Parser, Subcommand};
use coauthnet::centrality::Measure;
use coauthnet::pipeline::{self, RunConfig};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "coauthnet",
    version,
    about = "Co-authorship network analytics: build a collaboration graph, report statistics, rank authors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Select the relevant sub-corpus and write graph artifacts
    Build(BuildArgs),
    /// Macroscopic statistics of a built graph
    Stats(StatsArgs),
    /// Centrality rankings, Pareto fronts, scatter exports, and the
    /// rank-value fit
    Rank(RankArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Corpus file: one JSON paper record per line
    #[arg(long)]
    corpus: PathBuf,
    /// Analysis spec file: one JSON object with keywords, acronyms,
    /// seed_venues, and window
    #[arg(long)]
    spec: PathBuf,
    /// Artifact directory (created if missing)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    /// Artifact directory written by `build`
    #[arg(long)]
    out: PathBuf,
    /// Worker threads for the distance sweep; 0 = automatic
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct RankArgs {
    /// Artifact directory written by `build`
    #[arg(long)]
    out: PathBuf,
    /// Comma-separated measures to rank
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = parse_measure,
        default_value = "degree,betweenness,closeness,power,eigenvector"
    )]
    measures: Vec<Measure>,
    /// Bonacich β as a fraction of 1/λ_max (|fraction| < 1)
    #[arg(long, default_value_t = 0.75)]
    beta_frac: f64,
    /// Bonacich α (does not affect the normalized scores)
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Convergence threshold for the iterative solvers
    #[arg(long, default_value_t = coauthnet::centrality::DEFAULT_TOL)]
    tol: f64,
    /// Iteration cap for the iterative solvers
    #[arg(long, default_value_t = coauthnet::centrality::DEFAULT_MAX_ITER)]
    max_iter: usize,
    /// Head region (in ranks) for the rank-value power-law fit
    #[arg(long, default_value_t = coauthnet::scaling::DEFAULT_HEAD_CUT)]
    head_cut: usize,
    /// Keep only the first N fronts in the front report
    #[arg(long)]
    max_fronts: Option<usize>,
    /// Worker threads for the BFS fan-out; 0 = automatic
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse::<Measure>().map_err(|e| e.to_string())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(args) => pipeline::cmd_build(&RunConfig {
            corpus: args.corpus,
            spec: args.spec,
            out: args.out,
            ..RunConfig::default()
        }),
        Command::Stats(args) => pipeline::cmd_stats(&RunConfig {
            out: args.out,
            workers: args.workers,
            ..RunConfig::default()
        })
        .map(|_| ()),
        Command::Rank(args) => pipeline::cmd_rank(&RunConfig {
            out: args.out,
            measures: args.measures,
            beta_frac: args.beta_frac,
            alpha: args.alpha,
            tol: args.tol,
            max_iter: args.max_iter,
            head_cut: args.head_cut,
            max_fronts: args.max_fronts,
            workers: args.workers,
            ..RunConfig::default()
        }),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
