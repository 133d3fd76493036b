//! Runs the three pipeline stages end to end, like the CLI does.
//!
//! `build` selects the corpus and persists the network, `stats` reports the
//! macro table, and `rank` emits per-measure rankings, Pareto fronts, the
//! scatter projections, and the rank-value fit. Everything lands in one
//! output directory as plain CSV/JSON; the same functions back the
//! `coauthnet` binary's subcommands.

use coauthnet::{cmd_build, cmd_rank, cmd_stats, RunConfig};
use std::path::Path;

fn main() -> anyhow::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let out = std::env::temp_dir().join("coauthnet-full-pipeline");
    std::fs::create_dir_all(&out)?;

    let config = RunConfig {
        corpus: data.join("synthetic_corpus.jsonl"),
        spec: data.join("analysis_spec.json"),
        out: out.clone(),
        ..RunConfig::default()
    };

    cmd_build(&config)?;

    let report = cmd_stats(&config)?;
    println!(
        "stats: giant component {} of {} authors, diameter {}",
        report.giant_size, report.total_authors, report.diameter
    );

    cmd_rank(&config)?;

    let mut files: Vec<String> = std::fs::read_dir(&out)?
        .map(|e| Ok(e?.file_name().to_string_lossy().into_owned()))
        .collect::<anyhow::Result<_>>()?;
    files.sort();
    println!("\nartifacts in {}:", out.display());
    for f in &files {
        println!("  {f}");
    }
    Ok(())
}
