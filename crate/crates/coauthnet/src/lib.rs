//! Co-authorship network analytics.
//!
//! The crate turns a line-delimited JSON corpus of paper records into an
//! undirected collaboration graph and derives the standard descriptive
//! layers on top of it: macroscopic statistics, five centrality measures,
//! Pareto-front rankings across measures, and a rank-value scaling fit.
//!
//! The modules mirror the pipeline stages:
//!
//! - [`corpus`]: parse records, select the relevant sub-corpus by seed
//!   authors and recursive co-author expansion;
//! - [`graph`]: build the simple unweighted graph, BFS geodesics,
//!   connected components;
//! - [`macrostats`]: the one-table summary of the whole network;
//! - [`centrality`]: degree, betweenness, closeness, Bonacich power and
//!   eigenvector centrality;
//! - [`pareto`]: non-dominated sorting of authors across measures;
//! - [`scaling`]: power-law-with-cutoff fits of rank-value curves;
//! - [`pipeline`]: the staged build/stats/rank commands behind the
//!   `coauthnet` binary.
//!
//! Every stage is deterministic: re-running a command on the same inputs
//! reproduces identical bytes, regardless of thread count.

pub mod centrality;
pub mod corpus;
pub mod graph;
pub mod macrostats;
pub mod pareto;
pub mod pipeline;
pub mod scaling;

pub use centrality::{
    betweenness, bonacich_fixed_point, bonacich_power, closeness, degree, dominant_eigenvalue,
    eigenvector_centrality, BonacichParams, CentralityError, CentralityVector, Measure,
};
pub use corpus::{
    expand, is_relevant, parse_corpus, seed_authors, AnalysisSpec, CorpusError, CorpusSelection,
    PaperRecord, Provenance, RelevanceSpec, SeedSpec, YearWindow,
};
pub use graph::{
    bfs_row, build_graph, components, CoauthGraph, ComponentMap, DistanceRow, GraphError,
};
pub use macrostats::{macro_report, MacroError, MacroReport};
pub use pareto::{
    dominates, front_layering, pairwise_front, FrontAssignment, PairwiseFront, ParetoError,
    ScoreMatrix,
};
pub use pipeline::{cmd_build, cmd_rank, cmd_stats, PipelineError, RunConfig};
pub use scaling::{rank_fit, sorted_positive_scores, RankFit, ScalingError};
