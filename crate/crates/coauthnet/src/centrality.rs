//! The five per-author centrality measures: degree, betweenness (geodesic
//! mediation), closeness (reciprocal farness), Bonacich power, and
//! eigenvector centrality.
//!
//! All measures are exact — betweenness is never sampled — and every
//! computation is deterministic: parallel parts reduce partial results in
//! a fixed order, so repeated runs produce identical bytes.

use crate::graph::{bfs_row, components, shortest_path_tree, CoauthGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::str::FromStr;
use thiserror::Error;

/// Convergence threshold used when no explicit tolerance is given.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap used when no explicit limit is given.
pub const DEFAULT_MAX_ITER: usize = 10_000;

/// Sources per work unit in the parallel BFS sweeps. Partial scores are
/// folded in chunk order, so results are identical at any worker count.
const SOURCE_CHUNK: usize = 32;

/// The measures this module can compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Degree,
    Betweenness,
    Closeness,
    Power,
    Eigenvector,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Degree,
        Measure::Betweenness,
        Measure::Closeness,
        Measure::Power,
        Measure::Eigenvector,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Betweenness => "betweenness",
            Measure::Closeness => "closeness",
            Measure::Power => "power",
            Measure::Eigenvector => "eigenvector",
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = CentralityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "degree" => Ok(Measure::Degree),
            "betweenness" => Ok(Measure::Betweenness),
            "closeness" => Ok(Measure::Closeness),
            "power" => Ok(Measure::Power),
            "eigenvector" => Ok(Measure::Eigenvector),
            other => Err(CentralityError::UnknownMeasure {
                name: other.to_string(),
            }),
        }
    }
}

/// Parameters of the Bonacich power iteration `c ← A(α·1 + β·c)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BonacichParams {
    pub alpha: f64,
    pub beta: f64,
    pub max_iter: usize,
    /// Convergence threshold on the max absolute score change.
    pub tol: f64,
}

impl BonacichParams {
    /// Params with an explicit β and the default α = 1 and convergence
    /// settings.
    pub fn with_beta(beta: f64) -> Self {
        BonacichParams {
            alpha: 1.0,
            beta,
            max_iter: DEFAULT_MAX_ITER,
            tol: DEFAULT_TOL,
        }
    }

    /// Default parameters for a graph: β = 0.75/λ_max, which always
    /// satisfies the convergence condition while exposing non-degree
    /// structure.
    pub fn default_for(g: &CoauthGraph) -> Result<Self, CentralityError> {
        let lambda = dominant_eigenvalue(g, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
        Ok(Self::with_beta(0.75 / lambda))
    }

    fn validate(&self) -> Result<(), CentralityError> {
        if !self.alpha.is_finite() || self.alpha <= 0.0 {
            return Err(CentralityError::BadAlpha { alpha: self.alpha });
        }
        if !self.tol.is_finite() || self.tol <= 0.0 || self.max_iter == 0 {
            return Err(CentralityError::BadConvergenceParams);
        }
        Ok(())
    }
}

/// One computed measure over all nodes, with enough context to reproduce
/// it: the parameters used (for Bonacich power) and the normalization
/// convention applied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
    pub params: Option<BonacichParams>,
    pub normalization: String,
    /// Iterations used by the underlying solver, when iterative.
    pub iterations: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CentralityError {
    #[error("graph has no edges")]
    NoEdges,
    #[error(
        "unknown measure {name:?}: valid measures are degree, betweenness, closeness, power, eigenvector"
    )]
    UnknownMeasure { name: String },
    #[error("beta = {beta} violates |beta| * lambda_max < 1 (lambda_max = {lambda_max})")]
    BetaOutOfRange { beta: f64, lambda_max: f64 },
    #[error("alpha must be positive and finite, got {alpha}")]
    BadAlpha { alpha: f64 },
    #[error("tol must be positive and max_iter at least 1")]
    BadConvergenceParams,
    #[error("no convergence after {iterations} iterations (last estimate {last_estimate})")]
    NoConvergence {
        iterations: usize,
        /// Last eigenvalue estimate, or last max score change for the
        /// fixed-point solver.
        last_estimate: f64,
    },
    #[error("fixed point is numerically zero; tol {tol} is too coarse for this graph")]
    ZeroFixedPoint { tol: f64 },
}

/// Degree centrality: the number of distinct co-authors.
pub fn degree(g: &CoauthGraph) -> CentralityVector {
    let scores = (0..g.node_count()).map(|i| g.degree(i) as f64).collect();
    CentralityVector {
        measure: Measure::Degree,
        scores,
        params: None,
        normalization: "raw".into(),
        iterations: None,
    }
}

/// Dependency accumulation over one batch of sources. Sequential within
/// the batch so the fold order is fixed.
fn betweenness_chunk(g: &CoauthGraph, sources: &[usize]) -> Vec<f64> {
    let n = g.node_count();
    let mut score = vec![0.0; n];
    let mut delta = vec![0.0; n];
    for &s in sources {
        let tree = shortest_path_tree(g, s);
        delta.iter_mut().for_each(|d| *d = 0.0);
        for &w in tree.order.iter().rev() {
            let coeff = (1.0 + delta[w]) / tree.sigma[w] as f64;
            for &v in &tree.preds[w] {
                delta[v] += tree.sigma[v] as f64 * coeff;
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }
    score
}

/// Betweenness centrality: for each node, the sum over unordered pairs of
/// other mutually reachable nodes of the fraction of their geodesics that
/// pass through it. Exact, via per-source dependency accumulation.
pub fn betweenness(g: &CoauthGraph) -> CentralityVector {
    let n = g.node_count();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<Vec<f64>> = sources
        .chunks(SOURCE_CHUNK)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|chunk| betweenness_chunk(g, chunk))
        .collect();
    let mut scores = vec![0.0; n];
    for partial in &partials {
        for (total, p) in scores.iter_mut().zip(partial) {
            *total += p;
        }
    }
    // Source-by-source accumulation visits each unordered pair from both
    // ends; halve to count it once.
    for s in &mut scores {
        *s *= 0.5;
    }
    CentralityVector {
        measure: Measure::Betweenness,
        scores,
        params: None,
        normalization: "unordered_pairs".into(),
        iterations: None,
    }
}

/// Closeness centrality: the reciprocal of the summed geodesic distance to
/// every node reachable from `i`. Isolated nodes score 0. Scores are only
/// comparable within one component.
pub fn closeness(g: &CoauthGraph) -> CentralityVector {
    let scores: Vec<f64> = (0..g.node_count())
        .into_par_iter()
        .map(|i| {
            let row = bfs_row(g, i);
            let farness: u64 = row.dist.iter().flatten().map(|&d| u64::from(d)).sum();
            if farness == 0 {
                0.0
            } else {
                1.0 / farness as f64
            }
        })
        .collect();
    CentralityVector {
        measure: Measure::Closeness,
        scores,
        params: None,
        normalization: "reciprocal_farness".into(),
        iterations: None,
    }
}

enum StopRule {
    /// Stop when successive Rayleigh estimates differ by less than tol.
    EigenvalueDelta,
    /// Stop when ‖A·x − λ·x‖_∞ < tol for the current iterate.
    Residual,
}

/// Power iteration on the giant component. Iterates with the shift A + I,
/// which has the same dominant eigenvector but cannot oscillate on
/// bipartite components; λ is estimated by the Rayleigh quotient of A.
/// Returns a unit-norm nonnegative vector (zero outside the giant
/// component), the eigenvalue estimate, and the iteration count.
fn power_iteration(
    g: &CoauthGraph,
    giant: &[usize],
    tol: f64,
    max_iter: usize,
    stop: StopRule,
) -> Result<(Vec<f64>, f64, usize), CentralityError> {
    let n = g.node_count();
    let mut x = vec![0.0; n];
    let uniform = (giant.len() as f64).sqrt().recip();
    for &v in giant {
        x[v] = uniform;
    }
    let mut ax = vec![0.0; n];
    let mut prev_lambda = f64::NAN;
    for iter in 1..=max_iter {
        for &v in giant {
            ax[v] = g.neighbors(v).iter().map(|&u| x[u]).sum();
        }
        let lambda: f64 = giant.iter().map(|&v| x[v] * ax[v]).sum();
        let converged = match stop {
            StopRule::EigenvalueDelta => (lambda - prev_lambda).abs() < tol,
            StopRule::Residual => {
                giant
                    .iter()
                    .map(|&v| (ax[v] - lambda * x[v]).abs())
                    .fold(0.0, f64::max)
                    < tol
            }
        };
        if converged {
            return Ok((x, lambda, iter));
        }
        prev_lambda = lambda;
        let mut norm_sq = 0.0;
        for &v in giant {
            ax[v] += x[v];
            norm_sq += ax[v] * ax[v];
        }
        let scale = norm_sq.sqrt().recip();
        for &v in giant {
            x[v] = ax[v] * scale;
        }
    }
    Err(CentralityError::NoConvergence {
        iterations: max_iter,
        last_estimate: prev_lambda,
    })
}

fn giant_nodes(g: &CoauthGraph) -> Result<Vec<usize>, CentralityError> {
    if g.edge_count() == 0 {
        return Err(CentralityError::NoEdges);
    }
    Ok(components(g).nodes_of(0))
}

/// Dominant eigenvalue λ_max of the adjacency matrix, from power
/// iteration on the giant component; converged when successive estimates
/// differ by less than `tol`.
pub fn dominant_eigenvalue(
    g: &CoauthGraph,
    tol: f64,
    max_iter: usize,
) -> Result<f64, CentralityError> {
    let giant = giant_nodes(g)?;
    power_iteration(g, &giant, tol, max_iter, StopRule::EigenvalueDelta)
        .map(|(_, lambda, _)| lambda)
}

/// The raw Bonacich fixed point of `c ← A(α·1 + β·c)`, before any
/// normalization, plus the iterations used. Exposed so callers can verify
/// the fixed-point residual directly: the returned iterate satisfies
/// `‖A(α·1 + β·c) − c‖_∞ < tol`.
pub fn bonacich_fixed_point(
    g: &CoauthGraph,
    p: &BonacichParams,
) -> Result<(Vec<f64>, usize), CentralityError> {
    p.validate()?;
    if g.edge_count() == 0 {
        return Err(CentralityError::NoEdges);
    }
    let lambda = dominant_eigenvalue(g, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    if p.beta.abs() * lambda >= 1.0 {
        return Err(CentralityError::BetaOutOfRange {
            beta: p.beta,
            lambda_max: lambda,
        });
    }
    let n = g.node_count();
    let mut c = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut last_diff = f64::NAN;
    for iter in 1..=p.max_iter {
        for (v, slot) in next.iter_mut().enumerate() {
            *slot = g
                .neighbors(v)
                .iter()
                .map(|&u| p.alpha + p.beta * c[u])
                .sum();
        }
        let diff = c
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if diff < p.tol {
            // `c` itself moved by less than tol under one application of
            // the map, which is exactly the fixed-point residual bound.
            return Ok((c, iter));
        }
        std::mem::swap(&mut c, &mut next);
        last_diff = diff;
    }
    Err(CentralityError::NoConvergence {
        iterations: p.max_iter,
        last_estimate: last_diff,
    })
}

/// Bonacich power centrality: the fixed point of `c ← A(α·1 + β·c)`,
/// rescaled so the average squared score is exactly 1 (Σ c_i² = n). With
/// β = 0 the scores are proportional to degree; positive β credits
/// central neighbors, negative β penalizes them.
pub fn bonacich_power(
    g: &CoauthGraph,
    p: &BonacichParams,
) -> Result<CentralityVector, CentralityError> {
    let (mut c, iterations) = bonacich_fixed_point(g, p)?;
    let sum_sq: f64 = c.iter().map(|v| v * v).sum();
    if sum_sq == 0.0 {
        return Err(CentralityError::ZeroFixedPoint { tol: p.tol });
    }
    let scale = (g.node_count() as f64 / sum_sq).sqrt();
    for v in &mut c {
        *v *= scale;
    }
    Ok(CentralityVector {
        measure: Measure::Power,
        scores: c,
        params: Some(*p),
        normalization: "mean_square_one".into(),
        iterations: Some(iterations),
    })
}

/// Eigenvector centrality: the dominant eigenvector of the adjacency
/// matrix on the giant component, unit Euclidean norm, all entries
/// nonnegative; nodes outside the giant component score 0.
pub fn eigenvector_centrality(
    g: &CoauthGraph,
    tol: f64,
    max_iter: usize,
) -> Result<CentralityVector, CentralityError> {
    let giant = giant_nodes(g)?;
    let (mut x, _, iterations) = power_iteration(g, &giant, tol, max_iter, StopRule::Residual)?;
    // Sign convention: the largest-magnitude entry is positive. The
    // iteration is nonnegative throughout, so this is a no-op in practice.
    let top = x
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.abs().total_cmp(&b.abs()))
        .map(|(i, _)| i);
    if let Some(i) = top {
        if x[i] < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
    Ok(CentralityVector {
        measure: Measure::Eigenvector,
        scores: x,
        params: None,
        normalization: "unit_euclidean".into(),
        iterations: Some(iterations),
    })
}

/// Ranking export: CSV `rank,author,score`, descending score, ties broken
/// by ascending author name.
pub fn write_ranking_csv<W: Write>(
    g: &CoauthGraph,
    v: &CentralityVector,
    out: W,
) -> Result<(), csv::Error> {
    assert_eq!(v.scores.len(), g.node_count(), "scores match the graph");
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| {
        v.scores[b]
            .total_cmp(&v.scores[a])
            .then_with(|| g.node_name(a).cmp(g.node_name(b)))
    });
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rank", "author", "score"])?;
    for (rank, &i) in order.iter().enumerate() {
        w.write_record([
            &(rank + 1).to_string(),
            g.node_name(i),
            &v.scores[i].to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct MetadataLine<'a> {
    measure: Measure,
    params: Option<&'a BonacichParams>,
    normalization: &'a str,
    iterations: Option<usize>,
}

/// Companion metadata for a ranking: one JSON line-object with the
/// measure, parameters, normalization convention, and solver iterations.
pub fn write_metadata_line<W: Write>(v: &CentralityVector, mut out: W) -> std::io::Result<()> {
    let line = serde_json::to_string(&MetadataLine {
        measure: v.measure,
        params: v.params.as_ref(),
        normalization: &v.normalization,
        iterations: v.iterations,
    })
    .expect("metadata serializes");
    writeln!(out, "{line}")
}
