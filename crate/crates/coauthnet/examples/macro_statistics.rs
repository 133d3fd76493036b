//! Computes the macro-level network report for the bundled corpus.
//!
//! The report is the usual summary table for a collaboration network:
//! paper/author counts and their ratios, component structure, both
//! clustering coefficients, and the giant-component distance statistics.

use coauthnet::{
    build_graph, components, expand, macro_report, parse_corpus, seed_authors, AnalysisSpec,
};
use std::path::Path;

fn main() -> anyhow::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let spec = AnalysisSpec::load(&data.join("analysis_spec.json"))?;
    let corpus = parse_corpus(&data.join("synthetic_corpus.jsonl"))?;
    let seeds = seed_authors(&corpus, &spec.seeds());
    let selection = expand(&corpus, &seeds, &spec.relevance());
    let graph = build_graph(&selection, &corpus)?;

    let report = macro_report(&graph, &selection)?;
    println!("{:<28} {}", "papers", report.total_papers);
    println!("{:<28} {}", "authors", report.total_authors);
    println!(
        "{:<28} {:.4}",
        "papers per author", report.mean_papers_per_author
    );
    println!(
        "{:<28} {:.4}",
        "authors per paper", report.mean_authors_per_paper
    );
    println!(
        "{:<28} {:.4}",
        "collaborators per author", report.collaborators_per_author
    );
    println!("{:<28} {}", "giant component size", report.giant_size);
    println!("{:<28} {:.2}%", "giant component share", report.giant_pct);
    println!(
        "{:<28} {}",
        "second component size", report.second_component
    );
    println!(
        "{:<28} {:.4}",
        "clustering (avg local)", report.clustering_avg_local
    );
    println!(
        "{:<28} {:.4}",
        "clustering (transitivity)", report.clustering_transitivity
    );
    println!(
        "{:<28} {:.4}",
        "mean distance (giant)", report.mean_distance
    );
    println!("{:<28} {}", "diameter (giant)", report.diameter);

    // The component map behind the giant/second numbers.
    let comps = components(&graph);
    println!(
        "\n{} components; sizes of the largest:",
        comps.component_count()
    );
    for c in 0..comps.component_count().min(6) {
        let nodes = comps.nodes_of(c);
        let sample = graph.node_name(nodes[0]);
        println!(
            "  component {:>2}: {:>3} nodes (e.g. {})",
            c,
            nodes.len(),
            sample
        );
    }
    Ok(())
}
