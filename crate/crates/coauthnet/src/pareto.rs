//! Multi-objective combination of centrality measures via Pareto
//! dominance: successive non-dominated fronts over any subset of measures,
//! and pairwise fronts with scatter data for plotting.
//!
//! Dominance compares raw scores and depends only on their per-measure
//! order, so the normalization conventions used by the individual
//! measures can never change a front.

use crate::centrality::{CentralityVector, Measure};
use crate::graph::CoauthGraph;
use std::cmp::Ordering;
use std::io::Write;
use thiserror::Error;

/// Per-node score tuples over an ordered list of measures.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    measures: Vec<Measure>,
    authors: Vec<String>,
    rows: Vec<Vec<f64>>,
}

#[derive(Debug, Error)]
pub enum ParetoError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("score matrix needs at least one measure")]
    NoMeasures,
    #[error("duplicate measure {0} in score matrix")]
    DuplicateMeasure(Measure),
    #[error("author count {authors} does not match row count {rows}")]
    AuthorRowMismatch { authors: usize, rows: usize },
    #[error("row for {author:?} has arity {got}, expected {expected}")]
    RowArity {
        author: String,
        got: usize,
        expected: usize,
    },
    #[error("non-finite {measure} score for {author:?}")]
    NonFinite { measure: Measure, author: String },
    #[error("score vector for {measure} has {got} scores for {expected} nodes")]
    VectorLength {
        measure: Measure,
        got: usize,
        expected: usize,
    },
    #[error("measure {0} is not in the score matrix")]
    MeasureNotPresent(Measure),
    #[error("pairwise front needs two distinct measures, got {0} twice")]
    SameMeasure(Measure),
}

impl ScoreMatrix {
    /// Validating constructor over explicit rows (one per author, arity =
    /// number of measures, all finite).
    pub fn new(
        measures: Vec<Measure>,
        authors: Vec<String>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self, ParetoError> {
        if measures.is_empty() {
            return Err(ParetoError::NoMeasures);
        }
        for (i, m) in measures.iter().enumerate() {
            if measures[..i].contains(m) {
                return Err(ParetoError::DuplicateMeasure(*m));
            }
        }
        if authors.len() != rows.len() {
            return Err(ParetoError::AuthorRowMismatch {
                authors: authors.len(),
                rows: rows.len(),
            });
        }
        for (author, row) in authors.iter().zip(&rows) {
            if row.len() != measures.len() {
                return Err(ParetoError::RowArity {
                    author: author.clone(),
                    got: row.len(),
                    expected: measures.len(),
                });
            }
            for (m, v) in measures.iter().zip(row) {
                if !v.is_finite() {
                    return Err(ParetoError::NonFinite {
                        measure: *m,
                        author: author.clone(),
                    });
                }
            }
        }
        Ok(ScoreMatrix {
            measures,
            authors,
            rows,
        })
    }

    /// Assemble the matrix from computed centrality vectors, one column
    /// per vector, rows aligned with the graph's node indices.
    pub fn from_vectors(
        g: &CoauthGraph,
        vectors: &[&CentralityVector],
    ) -> Result<Self, ParetoError> {
        let n = g.node_count();
        for v in vectors {
            if v.scores.len() != n {
                return Err(ParetoError::VectorLength {
                    measure: v.measure,
                    got: v.scores.len(),
                    expected: n,
                });
            }
        }
        let measures = vectors.iter().map(|v| v.measure).collect();
        let authors = (0..n).map(|i| g.node_name(i).to_string()).collect();
        let rows = (0..n)
            .map(|i| vectors.iter().map(|v| v.scores[i]).collect())
            .collect();
        Self::new(measures, authors, rows)
    }

    pub fn measures(&self) -> &[Measure] {
        &self.measures
    }

    pub fn authors(&self) -> &[String] {
        &self.authors
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.measures.len()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    fn measure_column(&self, m: Measure) -> Result<usize, ParetoError> {
        self.measures
            .iter()
            .position(|&x| x == m)
            .ok_or(ParetoError::MeasureNotPresent(m))
    }
}

/// Strict Pareto dominance: `a` dominates `b` iff it is at least as good
/// everywhere and strictly better somewhere (all measures maximized).
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool, ParetoError> {
    if a.len() != b.len() {
        return Err(ParetoError::ArityMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(matches!(compare_dominance(a, b), Some(Ordering::Greater)))
}

/// `Some(Greater)` if a ≻ b, `Some(Less)` if b ≻ a, `None` when neither
/// dominates (equal or incomparable). Assumes equal arity.
fn compare_dominance(a: &[f64], b: &[f64]) -> Option<Ordering> {
    let mut a_better = false;
    let mut b_better = false;
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).expect("scores are finite") {
            Ordering::Greater => a_better = true,
            Ordering::Less => b_better = true,
            Ordering::Equal => {}
        }
        if a_better && b_better {
            return None;
        }
    }
    match (a_better, b_better) {
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        _ => None,
    }
}

/// Result of successive non-dominated sorting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontAssignment {
    /// 1-based front index per node; front 1 is non-dominated.
    pub front_of: Vec<usize>,
    /// Node indices per front, ascending; `fronts[0]` is front 1.
    pub fronts: Vec<Vec<usize>>,
}

impl FrontAssignment {
    pub fn front_count(&self) -> usize {
        self.fronts.len()
    }
}

/// Successive non-dominated sorting: front 1 holds the maximal elements,
/// front t+1 the elements that become maximal once fronts ≤ t are
/// removed. Duplicate tuples never dominate each other, so they share a
/// front. An empty matrix yields an empty assignment.
pub fn front_layering(m: &ScoreMatrix) -> FrontAssignment {
    let n = m.len();
    // Fast non-dominated sort: count dominators per node, record the
    // nodes each one dominates, then peel fronts by decrementing counts.
    let mut dominated_by = vec![0usize; n];
    let mut dominated: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            match compare_dominance(m.row(i), m.row(j)) {
                Some(Ordering::Greater) => {
                    dominated[i].push(j);
                    dominated_by[j] += 1;
                }
                Some(Ordering::Less) => {
                    dominated[j].push(i);
                    dominated_by[i] += 1;
                }
                _ => {}
            }
        }
    }

    let mut front_of = vec![0usize; n];
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by[i] == 0).collect();
    while !current.is_empty() {
        let index = fronts.len() + 1;
        let mut next = Vec::new();
        for &u in &current {
            front_of[u] = index;
            for &v in &dominated[u] {
                dominated_by[v] -= 1;
                if dominated_by[v] == 0 {
                    next.push(v);
                }
            }
        }
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
    }
    FrontAssignment { front_of, fronts }
}

/// Front 1 of a two-measure projection, with the full scatter of points.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseFront {
    pub x: Measure,
    pub y: Measure,
    /// Per node: `(x score, y score)`.
    pub points: Vec<(f64, f64)>,
    /// Per node: whether it sits on front 1 of the projection.
    pub on_front: Vec<bool>,
}

/// Project the matrix onto measures `(x, y)` and mark the non-dominated
/// front of the projection.
pub fn pairwise_front(
    m: &ScoreMatrix,
    x: Measure,
    y: Measure,
) -> Result<PairwiseFront, ParetoError> {
    if x == y {
        return Err(ParetoError::SameMeasure(x));
    }
    let cx = m.measure_column(x)?;
    let cy = m.measure_column(y)?;
    let points: Vec<(f64, f64)> = (0..m.len()).map(|i| (m.row(i)[cx], m.row(i)[cy])).collect();
    let on_front = (0..m.len())
        .map(|i| {
            let a = [points[i].0, points[i].1];
            !(0..m.len()).any(|j| {
                let b = [points[j].0, points[j].1];
                compare_dominance(&b, &a) == Some(Ordering::Greater)
            })
        })
        .collect();
    Ok(PairwiseFront {
        x,
        y,
        points,
        on_front,
    })
}

/// Front report CSV: `front,author,<measure tags…>`, fronts ascending,
/// authors alphabetical within each front. `max_fronts` truncates the
/// report to the first fronts; `None` writes all of them.
pub fn write_front_report<W: Write>(
    m: &ScoreMatrix,
    fa: &FrontAssignment,
    max_fronts: Option<usize>,
    out: W,
) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["front".to_string(), "author".to_string()];
    header.extend(m.measures().iter().map(|t| t.to_string()));
    w.write_record(&header)?;
    let limit = max_fronts.unwrap_or(fa.fronts.len()).min(fa.fronts.len());
    for (f, front) in fa.fronts.iter().take(limit).enumerate() {
        let mut members = front.clone();
        members.sort_by(|&a, &b| m.authors()[a].cmp(&m.authors()[b]));
        for i in members {
            let mut record = vec![(f + 1).to_string(), m.authors()[i].clone()];
            record.extend(m.row(i).iter().map(|v| v.to_string()));
            w.write_record(&record)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Scatter export for one measure pair: CSV `author,x,y,on_front` sorted
/// by author name, `on_front` written as 1/0 for plotting tools.
pub fn write_scatter<W: Write>(
    m: &ScoreMatrix,
    pf: &PairwiseFront,
    out: W,
) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["author", "x", "y", "on_front"])?;
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by(|&a, &b| m.authors()[a].cmp(&m.authors()[b]));
    for i in order {
        w.write_record([
            m.authors()[i].as_str(),
            &pf.points[i].0.to_string(),
            &pf.points[i].1.to_string(),
            if pf.on_front[i] { "1" } else { "0" },
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{betweenness, closeness};
    use proptest::prelude::*;

    fn matrix(rows: Vec<Vec<f64>>, measures: Vec<Measure>) -> ScoreMatrix {
        let authors = (0..rows.len()).map(|i| format!("a{i:03}")).collect();
        ScoreMatrix::new(measures, authors, rows).unwrap()
    }

    fn two_measure(rows: Vec<Vec<f64>>) -> ScoreMatrix {
        matrix(rows, vec![Measure::Degree, Measure::Betweenness])
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&[2.0, 2.0], &[1.0, 1.0]).unwrap());
        assert!(!dominates(&[2.0, 1.0], &[1.0, 2.0]).unwrap());
        assert!(!dominates(&[1.0, 1.0], &[1.0, 1.0]).unwrap());
        assert!(dominates(&[1.0, 2.0], &[1.0, 1.0]).unwrap());
        assert!(matches!(
            dominates(&[1.0], &[1.0, 2.0]),
            Err(ParetoError::ArityMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn layering_example() {
        let m = two_measure(vec![
            vec![3.0, 1.0],
            vec![1.0, 3.0],
            vec![2.0, 2.0],
            vec![1.0, 1.0],
        ]);
        let fa = front_layering(&m);
        assert_eq!(fa.fronts, vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(fa.front_of, vec![1, 1, 1, 2]);
    }

    #[test]
    fn identical_tuples_share_one_front() {
        let m = two_measure(vec![vec![1.0, 1.0]; 4]);
        let fa = front_layering(&m);
        assert_eq!(fa.fronts, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn single_node_and_empty_matrix() {
        let m = two_measure(vec![vec![0.0, 0.0]]);
        let fa = front_layering(&m);
        assert_eq!(fa.fronts, vec![vec![0]]);

        let m = two_measure(vec![]);
        let fa = front_layering(&m);
        assert!(fa.fronts.is_empty());
        assert!(fa.front_of.is_empty());
    }

    #[test]
    fn one_measure_layers_by_descending_value() {
        let m = matrix(
            vec![vec![3.0], vec![1.0], vec![3.0], vec![2.0]],
            vec![Measure::Betweenness],
        );
        let fa = front_layering(&m);
        assert_eq!(fa.fronts, vec![vec![0, 2], vec![3], vec![1]]);
    }

    #[test]
    fn matrix_validation() {
        assert!(matches!(
            ScoreMatrix::new(vec![], vec![], vec![]),
            Err(ParetoError::NoMeasures)
        ));
        assert!(matches!(
            ScoreMatrix::new(
                vec![Measure::Degree, Measure::Degree],
                vec!["a".into()],
                vec![vec![1.0, 1.0]],
            ),
            Err(ParetoError::DuplicateMeasure(Measure::Degree))
        ));
        assert!(matches!(
            ScoreMatrix::new(
                vec![Measure::Degree],
                vec!["a".into()],
                vec![vec![1.0, 2.0]],
            ),
            Err(ParetoError::RowArity { .. })
        ));
        assert!(matches!(
            ScoreMatrix::new(
                vec![Measure::Degree],
                vec!["a".into()],
                vec![vec![f64::NAN]],
            ),
            Err(ParetoError::NonFinite { .. })
        ));
    }

    #[test]
    fn path_midpoint_owns_the_pairwise_front() {
        let g =
            CoauthGraph::from_edges(vec!["A".into(), "B".into(), "C".into()], &[(0, 1), (1, 2)]);
        let m = ScoreMatrix::from_vectors(&g, &[&closeness(&g), &betweenness(&g)]).unwrap();
        let pf = pairwise_front(&m, Measure::Closeness, Measure::Betweenness).unwrap();
        assert_eq!(pf.on_front, vec![false, true, false]);
    }

    #[test]
    fn incomparable_points_are_both_on_front() {
        let m = two_measure(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        let pf = pairwise_front(&m, Measure::Degree, Measure::Betweenness).unwrap();
        assert_eq!(pf.on_front, vec![true, true]);
    }

    #[test]
    fn pairwise_rejects_bad_measure_choices() {
        let m = two_measure(vec![vec![1.0, 2.0]]);
        assert!(matches!(
            pairwise_front(&m, Measure::Degree, Measure::Degree),
            Err(ParetoError::SameMeasure(Measure::Degree))
        ));
        assert!(matches!(
            pairwise_front(&m, Measure::Degree, Measure::Closeness),
            Err(ParetoError::MeasureNotPresent(Measure::Closeness))
        ));
    }

    #[test]
    fn front_report_format() {
        let m = ScoreMatrix::new(
            vec![Measure::Degree, Measure::Betweenness],
            vec!["carol".into(), "alice".into(), "bob".into()],
            vec![vec![3.0, 1.0], vec![1.0, 3.0], vec![1.0, 1.0]],
        )
        .unwrap();
        let fa = front_layering(&m);
        let mut out = Vec::new();
        write_front_report(&m, &fa, None, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "front,author,degree,betweenness\n\
             1,alice,1,3\n\
             1,carol,3,1\n\
             2,bob,1,1\n"
        );

        let mut out = Vec::new();
        write_front_report(&m, &fa, Some(1), &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "front,author,degree,betweenness\n1,alice,1,3\n1,carol,3,1\n"
        );
    }

    #[test]
    fn scatter_format() {
        let m = ScoreMatrix::new(
            vec![Measure::Degree, Measure::Betweenness],
            vec!["bob".into(), "alice".into()],
            vec![vec![2.0, 1.0], vec![1.0, 2.0]],
        )
        .unwrap();
        let pf = pairwise_front(&m, Measure::Degree, Measure::Betweenness).unwrap();
        let mut out = Vec::new();
        write_scatter(&m, &pf, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "author,x,y,on_front\nalice,1,2,1\nbob,2,1,1\n"
        );
    }

    // O(n²) repeated maximal-set extraction, the spec oracle.
    fn oracle_layers(m: &ScoreMatrix) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = (0..m.len()).collect();
        let mut layers = Vec::new();
        while !remaining.is_empty() {
            let maximal: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&u| {
                    !remaining
                        .iter()
                        .any(|&v| dominates(m.row(v), m.row(u)).unwrap())
                })
                .collect();
            remaining.retain(|u| !maximal.contains(u));
            layers.push(maximal);
        }
        layers
    }

    fn small_matrix() -> impl Strategy<Value = ScoreMatrix> {
        (1usize..=3, 1usize..40).prop_flat_map(|(k, n)| {
            // Coarse integer-valued scores to force plenty of ties and
            // duplicate tuples.
            prop::collection::vec(prop::collection::vec(0.0..5.0f64, k), n).prop_map(
                move |mut rows| {
                    for row in &mut rows {
                        for v in row.iter_mut() {
                            *v = v.floor();
                        }
                    }
                    let measures = Measure::ALL[..k].to_vec();
                    let authors = (0..rows.len()).map(|i| format!("a{i:03}")).collect();
                    ScoreMatrix::new(measures, authors, rows).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn layering_matches_the_oracle(m in small_matrix()) {
            let fa = front_layering(&m);
            prop_assert_eq!(fa.fronts, oracle_layers(&m));
        }

        #[test]
        fn monotone_transforms_preserve_fronts(m in small_matrix(), pick in 0u8..3) {
            let fa = front_layering(&m);
            let transform = |c: usize, v: f64| -> f64 {
                match (pick as usize + c) % 3 {
                    0 => 3.0 * v + 7.0,
                    1 => v.exp(),
                    _ => (v + 1.0).powi(3),
                }
            };
            let rows: Vec<Vec<f64>> = (0..m.len())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .enumerate()
                        .map(|(c, &v)| transform(c, v))
                        .collect()
                })
                .collect();
            let m2 = ScoreMatrix::new(
                m.measures().to_vec(),
                m.authors().to_vec(),
                rows,
            ).unwrap();
            let fa2 = front_layering(&m2);
            prop_assert_eq!(fa, fa2);
        }

        #[test]
        fn pairwise_front_is_consistent_with_projected_dominance(m in small_matrix()) {
            prop_assume!(m.arity() >= 2);
            let (x, y) = (m.measures()[0], m.measures()[1]);
            let pf = pairwise_front(&m, x, y).unwrap();
            for i in 0..m.len() {
                let dominated = (0..m.len()).any(|j| {
                    compare_dominance(
                        &[pf.points[j].0, pf.points[j].1],
                        &[pf.points[i].0, pf.points[i].1],
                    ) == Some(Ordering::Greater)
                });
                prop_assert_eq!(pf.on_front[i], !dominated);
            }
        }

        #[test]
        fn removing_a_front_one_node_never_demotes_anyone(m in small_matrix()) {
            prop_assume!(m.len() >= 2);
            let fa = front_layering(&m);
            let drop = fa.fronts[0][0];
            let keep: Vec<usize> = (0..m.len()).filter(|&i| i != drop).collect();
            let m2 = ScoreMatrix::new(
                m.measures().to_vec(),
                keep.iter().map(|&i| m.authors()[i].clone()).collect(),
                keep.iter().map(|&i| m.row(i).to_vec()).collect(),
            ).unwrap();
            let fa2 = front_layering(&m2);
            for (new_idx, &old_idx) in keep.iter().enumerate() {
                prop_assert!(fa2.front_of[new_idx] <= fa.front_of[old_idx]);
            }
        }
    }
}
