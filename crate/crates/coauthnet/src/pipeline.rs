//! Staged pipeline behind the `coauthnet` binary: `build` selects the
//! sub-corpus and writes graph artifacts, `stats` reports macroscopic
//! statistics, `rank` produces centrality rankings, Pareto fronts,
//! scatter exports, and the rank-value fit.
//!
//! Stages communicate through files in the output directory so the graph
//! is constructed once. All outputs are byte-identical across repeated
//! runs on the same inputs, at any worker count: the only parallel
//! reductions are fixed-order or integer-valued.

use crate::centrality::{self, BonacichParams, CentralityError, CentralityVector, Measure};
use crate::corpus::{self, AnalysisSpec, CorpusError, CorpusSelection, Provenance};
use crate::graph::{components, CoauthGraph, GraphError};
use crate::macrostats::{macro_report, MacroError, MacroReport};
use crate::pareto::{self, ParetoError, ScoreMatrix};
use crate::scaling::{self, ScalingError};
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Artifact file names inside the output directory.
pub const PAPERS_FILE: &str = "papers.txt";
pub const AUTHORS_FILE: &str = "authors.csv";
pub const EDGES_FILE: &str = "edges.csv";
pub const GRAPH_FILE: &str = "graph.json";
pub const SUMMARY_FILE: &str = "build_summary.json";
pub const MACRO_CSV_FILE: &str = "macro_report.csv";
pub const MACRO_JSON_FILE: &str = "macro_report.json";
pub const COMPONENTS_FILE: &str = "components.csv";
pub const FRONT_FILE: &str = "front_report.csv";
pub const FIT_FILE: &str = "rank_fit.csv";
pub const FIT_PLOT_FILE: &str = "rank_fit_plot.csv";

/// Ranking CSV name for one measure.
pub fn ranking_file(m: Measure) -> String {
    format!("ranking_{m}.csv")
}

/// Ranking metadata line-object name for one measure.
pub fn ranking_meta_file(m: Measure) -> String {
    format!("ranking_{m}_meta.json")
}

/// Scatter export name for one measure pair.
pub fn scatter_file(x: Measure, y: Measure) -> String {
    format!("scatter_{x}_{y}.csv")
}

/// Everything a command run needs. `build` uses the input paths and the
/// output directory; `stats` and `rank` read artifacts from the output
/// directory and use the remaining knobs.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Line-delimited JSON corpus of paper records.
    pub corpus: PathBuf,
    /// Analysis specification (relevance + seed definition), one JSON
    /// object.
    pub spec: PathBuf,
    /// Artifact directory shared by all stages.
    pub out: PathBuf,
    /// Measures to rank; must be non-empty for `rank`.
    pub measures: Vec<Measure>,
    /// Bonacich β as a fraction of 1/λ_max; |fraction| < 1 keeps the
    /// iteration convergent.
    pub beta_frac: f64,
    /// Bonacich α (pre-normalization scale; the reported scores do not
    /// depend on it).
    pub alpha: f64,
    /// Convergence threshold for the iterative solvers.
    pub tol: f64,
    /// Iteration cap for the iterative solvers.
    pub max_iter: usize,
    /// Head region for the rank-value fit.
    pub head_cut: usize,
    /// Truncate the front report to this many fronts; `None` keeps all.
    pub max_fronts: Option<usize>,
    /// Worker threads for the BFS fan-out stages; 0 lets the runtime
    /// decide. Outputs do not depend on this.
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            corpus: PathBuf::new(),
            spec: PathBuf::new(),
            out: PathBuf::new(),
            measures: Measure::ALL.to_vec(),
            beta_frac: 0.75,
            alpha: 1.0,
            tol: centrality::DEFAULT_TOL,
            max_iter: centrality::DEFAULT_MAX_ITER,
            head_cut: scaling::DEFAULT_HEAD_CUT,
            max_fronts: None,
            workers: 0,
        }
    }
}

/// Pipeline failure, split by who must act: `Usage` is an input or
/// configuration problem (exit code 2), `Internal` a computation or
/// output failure (exit code 1).
#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl PipelineError {
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Usage(_) => 2,
            PipelineError::Internal(_) => 1,
        }
    }
}

impl From<CorpusError> for PipelineError {
    fn from(e: CorpusError) -> Self {
        PipelineError::Usage(e.to_string())
    }
}

impl From<GraphError> for PipelineError {
    fn from(e: GraphError) -> Self {
        PipelineError::Usage(e.to_string())
    }
}

impl From<MacroError> for PipelineError {
    fn from(e: MacroError) -> Self {
        PipelineError::Usage(e.to_string())
    }
}

impl From<CentralityError> for PipelineError {
    fn from(e: CentralityError) -> Self {
        match e {
            CentralityError::NoConvergence { .. } | CentralityError::ZeroFixedPoint { .. } => {
                PipelineError::Internal(e.to_string())
            }
            _ => PipelineError::Usage(e.to_string()),
        }
    }
}

impl From<ParetoError> for PipelineError {
    fn from(e: ParetoError) -> Self {
        // The pipeline assembles matrices from vectors it just computed,
        // so any failure here is a bug or numeric breakdown, not usage.
        PipelineError::Internal(e.to_string())
    }
}

impl From<ScalingError> for PipelineError {
    fn from(e: ScalingError) -> Self {
        PipelineError::Usage(e.to_string())
    }
}

fn write_failed(path: &Path, e: impl std::fmt::Display) -> PipelineError {
    PipelineError::Internal(format!("writing {}: {e}", path.display()))
}

fn read_failed(path: &Path, e: impl std::fmt::Display) -> PipelineError {
    PipelineError::Usage(format!("reading {}: {e}", path.display()))
}

/// Serialized graph artifact: enough to rebuild the graph and selection
/// without re-parsing the corpus. Authors are in node-index order, which
/// is lexicographic by name.
#[derive(Debug, Serialize, Deserialize)]
struct GraphFile {
    authors: Vec<AuthorEntry>,
    /// `(u, v, papers)` with `u < v`, ascending.
    edges: Vec<(usize, usize, usize)>,
    paper_ids: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AuthorEntry {
    name: String,
    provenance: Provenance,
    papers: usize,
}

#[derive(Serialize)]
struct BuildSummary {
    papers: usize,
    authors: usize,
    edges: usize,
    seed_authors: usize,
    expanded_authors: usize,
    ignored_seeds: usize,
}

fn create_out_file(dir: &Path, name: &str) -> Result<(PathBuf, BufWriter<File>), PipelineError> {
    let path = dir.join(name);
    let file = File::create(&path).map_err(|e| write_failed(&path, e))?;
    Ok((path, BufWriter::new(file)))
}

/// Select the sub-corpus, build the graph, and write all build artifacts:
/// paper ids, author manifest, edge list, build summary, and the graph
/// file consumed by `stats` and `rank`. An empty seed set is a warning,
/// not an error: the artifacts are written empty.
pub fn cmd_build(cfg: &RunConfig) -> Result<(), PipelineError> {
    let spec = AnalysisSpec::load(&cfg.spec)?;
    let records = corpus::parse_corpus(&cfg.corpus)?;

    let seeds = corpus::seed_authors(&records, &spec.seeds());
    if seeds.is_empty() {
        eprintln!(
            "warning: no seed authors matched the seed venues and window; outputs will be empty"
        );
    }
    let selection = corpus::expand(&records, &seeds, &spec.relevance());
    if selection.ignored_seeds > 0 {
        eprintln!(
            "warning: {} seed author(s) never occur in the corpus",
            selection.ignored_seeds
        );
    }
    let graph = crate::graph::build_graph(&selection, &records)?;

    std::fs::create_dir_all(&cfg.out).map_err(|e| write_failed(&cfg.out, e))?;

    let (path, mut w) = create_out_file(&cfg.out, PAPERS_FILE)?;
    selection
        .write_paper_ids(&mut w)
        .and_then(|()| w.flush())
        .map_err(|e| write_failed(&path, e))?;

    let (path, w) = create_out_file(&cfg.out, AUTHORS_FILE)?;
    selection
        .write_author_manifest(w)
        .map_err(|e| write_failed(&path, e))?;

    let (path, w) = create_out_file(&cfg.out, EDGES_FILE)?;
    graph
        .write_edge_list(w)
        .map_err(|e| write_failed(&path, e))?;

    let graph_file = GraphFile {
        authors: (0..graph.node_count())
            .map(|i| AuthorEntry {
                name: graph.node_name(i).to_string(),
                provenance: selection.authors[graph.node_name(i)],
                papers: graph.paper_count(i),
            })
            .collect(),
        edges: graph.edges().collect(),
        paper_ids: selection.papers.iter().cloned().collect(),
    };
    let (path, mut w) = create_out_file(&cfg.out, GRAPH_FILE)?;
    serde_json::to_writer(&mut w, &graph_file)
        .map_err(std::io::Error::from)
        .and_then(|()| writeln!(w))
        .and_then(|()| w.flush())
        .map_err(|e| write_failed(&path, e))?;

    let seed_count = graph_file
        .authors
        .iter()
        .filter(|a| a.provenance == Provenance::Seed)
        .count();
    let summary = BuildSummary {
        papers: selection.papers.len(),
        authors: graph.node_count(),
        edges: graph.edge_count(),
        seed_authors: seed_count,
        expanded_authors: graph.node_count() - seed_count,
        ignored_seeds: selection.ignored_seeds,
    };
    let (path, mut w) = create_out_file(&cfg.out, SUMMARY_FILE)?;
    serde_json::to_writer(&mut w, &summary)
        .map_err(std::io::Error::from)
        .and_then(|()| writeln!(w))
        .and_then(|()| w.flush())
        .map_err(|e| write_failed(&path, e))?;

    println!(
        "built graph: {} papers, {} authors, {} edges",
        summary.papers, summary.authors, summary.edges
    );
    Ok(())
}

/// Load the graph artifact written by [`cmd_build`].
fn load_graph(out: &Path) -> Result<(CoauthGraph, CorpusSelection), PipelineError> {
    let path = out.join(GRAPH_FILE);
    let text = std::fs::read_to_string(&path).map_err(|e| read_failed(&path, e))?;
    let file: GraphFile = serde_json::from_str(text.trim()).map_err(|e| read_failed(&path, e))?;

    let names: Vec<String> = file.authors.iter().map(|a| a.name.clone()).collect();
    let counts: Vec<usize> = file.authors.iter().map(|a| a.papers).collect();
    let graph = CoauthGraph::from_parts(names, counts, file.edges)?;

    let mut selection = CorpusSelection {
        papers: file.paper_ids.into_iter().collect(),
        ..CorpusSelection::default()
    };
    for a in file.authors {
        selection.authors.insert(a.name, a.provenance);
    }
    Ok((graph, selection))
}

/// Run `f` with `workers` threads backing the parallel stages; 0 keeps
/// the runtime default. Worker count never changes any output bytes.
fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, PipelineError> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| PipelineError::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Compute the macro report from built artifacts and write it as CSV and
/// as a JSON line-object; the CSV is echoed to standard output.
pub fn cmd_stats(cfg: &RunConfig) -> Result<MacroReport, PipelineError> {
    let (graph, selection) = load_graph(&cfg.out)?;
    let report = with_pool(cfg.workers, || macro_report(&graph, &selection))??;

    let (path, w) = create_out_file(&cfg.out, MACRO_CSV_FILE)?;
    report.write_csv(w).map_err(|e| write_failed(&path, e))?;
    let (path, w) = create_out_file(&cfg.out, MACRO_JSON_FILE)?;
    report
        .write_json_line(w)
        .map_err(|e| write_failed(&path, e))?;

    let mut stdout = Vec::new();
    report.write_csv(&mut stdout).expect("in-memory write");
    print!("{}", String::from_utf8(stdout).expect("csv is utf-8"));
    Ok(report)
}

fn compute_measure(
    g: &CoauthGraph,
    m: Measure,
    cfg: &RunConfig,
) -> Result<CentralityVector, PipelineError> {
    Ok(match m {
        Measure::Degree => centrality::degree(g),
        Measure::Betweenness => centrality::betweenness(g),
        Measure::Closeness => centrality::closeness(g),
        Measure::Power => {
            let lambda = centrality::dominant_eigenvalue(g, cfg.tol, cfg.max_iter)?;
            let params = BonacichParams {
                alpha: cfg.alpha,
                beta: cfg.beta_frac / lambda,
                max_iter: cfg.max_iter,
                tol: cfg.tol,
            };
            centrality::bonacich_power(g, &params)?
        }
        Measure::Eigenvector => centrality::eigenvector_centrality(g, cfg.tol, cfg.max_iter)?,
    })
}

/// Rank authors: one ranking CSV plus metadata per selected measure, a
/// component map (closeness scores are only comparable within one
/// component), the front report over all selected measures, a scatter
/// export per measure pair, and the betweenness rank-value fit. A fit
/// with too few positive scores is skipped with a warning rather than
/// failing the run.
pub fn cmd_rank(cfg: &RunConfig) -> Result<(), PipelineError> {
    if cfg.measures.is_empty() {
        return Err(PipelineError::Usage(
            "no measures selected; pass at least one of degree, betweenness, closeness, power, eigenvector".into(),
        ));
    }
    for (i, m) in cfg.measures.iter().enumerate() {
        if cfg.measures[..i].contains(m) {
            return Err(PipelineError::Usage(format!(
                "measure {m} selected more than once"
            )));
        }
    }
    if cfg.head_cut < 2 {
        return Err(PipelineError::Usage(format!(
            "head-cut must be at least 2, got {}",
            cfg.head_cut
        )));
    }
    if !cfg.beta_frac.is_finite() || cfg.beta_frac.abs() >= 1.0 {
        return Err(PipelineError::Usage(format!(
            "beta-frac must satisfy |f| < 1 to keep the power iteration convergent, got {}",
            cfg.beta_frac
        )));
    }

    let (graph, _selection) = load_graph(&cfg.out)?;
    let vectors: Vec<CentralityVector> = with_pool(cfg.workers, || {
        cfg.measures
            .iter()
            .map(|&m| compute_measure(&graph, m, cfg))
            .collect::<Result<_, _>>()
    })??;

    for v in &vectors {
        let (path, w) = create_out_file(&cfg.out, &ranking_file(v.measure))?;
        centrality::write_ranking_csv(&graph, v, w).map_err(|e| write_failed(&path, e))?;
        let (path, w) = create_out_file(&cfg.out, &ranking_meta_file(v.measure))?;
        centrality::write_metadata_line(v, w).map_err(|e| write_failed(&path, e))?;
    }

    // Component map: closeness (and any per-component reading of the
    // other measures) is only comparable within a component.
    let cm = components(&graph);
    let (path, w) = create_out_file(&cfg.out, COMPONENTS_FILE)?;
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record(["author", "component"])
        .and_then(|()| {
            for i in 0..graph.node_count() {
                csv.write_record([graph.node_name(i), &cm.component_of[i].to_string()])?;
            }
            csv.flush()?;
            Ok(())
        })
        .map_err(|e| write_failed(&path, e))?;

    let refs: Vec<&CentralityVector> = vectors.iter().collect();
    let matrix = ScoreMatrix::from_vectors(&graph, &refs)?;
    let assignment = pareto::front_layering(&matrix);
    let (path, w) = create_out_file(&cfg.out, FRONT_FILE)?;
    pareto::write_front_report(&matrix, &assignment, cfg.max_fronts, w)
        .map_err(|e| write_failed(&path, e))?;

    for (i, &x) in cfg.measures.iter().enumerate() {
        for &y in &cfg.measures[i + 1..] {
            let pf = pareto::pairwise_front(&matrix, x, y)?;
            let (path, w) = create_out_file(&cfg.out, &scatter_file(x, y))?;
            pareto::write_scatter(&matrix, &pf, w).map_err(|e| write_failed(&path, e))?;
        }
    }

    match vectors.iter().find(|v| v.measure == Measure::Betweenness) {
        Some(v) => match scaling::rank_fit(v, Some(cfg.head_cut)) {
            Ok(fit) => {
                let (path, w) = create_out_file(&cfg.out, FIT_FILE)?;
                fit.write_csv(w).map_err(|e| write_failed(&path, e))?;
                let (path, w) = create_out_file(&cfg.out, FIT_PLOT_FILE)?;
                scaling::write_plot_data(v, &fit, w).map_err(|e| write_failed(&path, e))?;
            }
            Err(e @ ScalingError::InsufficientData { .. }) => {
                eprintln!("warning: skipping rank-value fit: {e}");
            }
            Err(e) => return Err(e.into()),
        },
        None => {
            eprintln!(
                "warning: skipping rank-value fit: betweenness is not among the selected measures"
            );
        }
    }

    println!(
        "ranked {} authors across {} measure(s); {} front(s)",
        graph.node_count(),
        cfg.measures.len(),
        assignment.front_count()
    );
    Ok(())
}
