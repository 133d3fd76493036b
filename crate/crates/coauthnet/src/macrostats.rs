//! Macroscopic network statistics: the one-table summary of a
//! co-authorship network (sizes, means, components, clustering, and
//! giant-component distances).

use crate::corpus::CorpusSelection;
use crate::graph::{bfs_row, components, CoauthGraph};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use thiserror::Error;

/// Flat summary of the whole network; one value per headline measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MacroReport {
    pub total_papers: usize,
    pub total_authors: usize,
    pub mean_papers_per_author: f64,
    pub mean_authors_per_paper: f64,
    /// Mean degree.
    pub collaborators_per_author: f64,
    pub giant_size: usize,
    /// Giant share of the author set, in percent.
    pub giant_pct: f64,
    pub second_component: usize,
    /// Average local clustering coefficient; nodes with degree < 2 are
    /// excluded from the average (0.0 when no node qualifies).
    pub clustering_avg_local: f64,
    /// Global transitivity: 3·(#triangles) / (#connected triples).
    pub clustering_transitivity: f64,
    /// Mean geodesic length over unordered pairs in the giant component;
    /// 0.0 when the giant component has fewer than 2 nodes.
    pub mean_distance: f64,
    /// Longest geodesic within the giant component.
    pub diameter: u32,
}

#[derive(Debug, Error)]
pub enum MacroError {
    #[error("empty network")]
    EmptyNetwork,
}

/// Number of edges among the neighbors of `i`, i.e. triangles through `i`.
/// Counted by sorted-list intersection, each neighborhood edge twice.
fn triangles_through(g: &CoauthGraph, i: usize) -> usize {
    let mine = g.neighbors(i);
    let twice: usize = mine
        .iter()
        .map(|&u| sorted_intersection_len(mine, g.neighbors(u)))
        .sum();
    twice / 2
}

fn sorted_intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut len) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                len += 1;
                i += 1;
                j += 1;
            }
        }
    }
    len
}

/// Compute the full macroscopic report for a graph built from `selection`.
///
/// Mean distance and diameter are taken over the giant component only;
/// pairs straddling components have no finite geodesic and are excluded.
pub fn macro_report(
    g: &CoauthGraph,
    selection: &CorpusSelection,
) -> Result<MacroReport, MacroError> {
    let n = g.node_count();
    if n == 0 {
        return Err(MacroError::EmptyNetwork);
    }
    debug_assert_eq!(n, selection.authors.len(), "graph not built from selection");

    let total_papers = selection.papers.len();
    // Each signature counts once from either side, so one sum serves both
    // per-author and per-paper means.
    let signatures: usize = (0..n).map(|i| g.paper_count(i)).sum();
    let mean_papers_per_author = signatures as f64 / n as f64;
    let mean_authors_per_paper = signatures as f64 / total_papers as f64;
    let collaborators_per_author = 2.0 * g.edge_count() as f64 / n as f64;

    let cm = components(g);
    let giant_size = cm.giant_size();
    let giant_pct = 100.0 * giant_size as f64 / n as f64;

    // Clustering: triangle counts per node feed both variants.
    let tri: Vec<usize> = (0..n).map(|i| triangles_through(g, i)).collect();
    let mut local_sum = 0.0;
    let mut local_nodes = 0usize;
    let mut closed_triples = 0usize;
    let mut triples = 0usize;
    for (i, &t) in tri.iter().enumerate() {
        let d = g.degree(i);
        if d < 2 {
            continue;
        }
        let pairs = d * (d - 1) / 2;
        local_sum += t as f64 / pairs as f64;
        local_nodes += 1;
        closed_triples += t;
        triples += pairs;
    }
    let clustering_avg_local = if local_nodes > 0 {
        local_sum / local_nodes as f64
    } else {
        0.0
    };
    let clustering_transitivity = if triples > 0 {
        closed_triples as f64 / triples as f64
    } else {
        0.0
    };

    // Giant-component geodesics. Integer sums make the parallel fold
    // exactly order-independent; the single division happens at the end.
    let giant_nodes = cm.nodes_of(0);
    let (dist_sum, diameter) = if giant_size >= 2 {
        giant_nodes
            .par_iter()
            .map(|&s| {
                let row = bfs_row(g, s);
                let mut sum = 0u64;
                let mut max = 0u32;
                for d in row.dist.iter().flatten() {
                    sum += u64::from(*d);
                    max = max.max(*d);
                }
                (sum, max)
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1.max(b.1)))
    } else {
        (0, 0)
    };
    let mean_distance = if giant_size >= 2 {
        // Ordered-pair sum over giant·(giant−1) ordered pairs.
        dist_sum as f64 / (giant_size as f64 * (giant_size as f64 - 1.0))
    } else {
        0.0
    };

    Ok(MacroReport {
        total_papers,
        total_authors: n,
        mean_papers_per_author,
        mean_authors_per_paper,
        collaborators_per_author,
        giant_size,
        giant_pct,
        second_component: cm.second_size(),
        clustering_avg_local,
        clustering_transitivity,
        mean_distance,
        diameter,
    })
}

impl MacroReport {
    /// Flat `key,value` CSV; keys are exactly the field names, in
    /// declaration order.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["key", "value"])?;
        for (key, value) in self.rows() {
            w.write_record([key, &value])?;
        }
        w.flush()?;
        Ok(())
    }

    /// The report as one JSON line-object, `\n`-terminated.
    pub fn write_json_line<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let line = serde_json::to_string(self).expect("report serializes");
        writeln!(out, "{line}")
    }

    fn rows(&self) -> Vec<(&'static str, String)> {
        vec![
            ("total_papers", self.total_papers.to_string()),
            ("total_authors", self.total_authors.to_string()),
            (
                "mean_papers_per_author",
                self.mean_papers_per_author.to_string(),
            ),
            (
                "mean_authors_per_paper",
                self.mean_authors_per_paper.to_string(),
            ),
            (
                "collaborators_per_author",
                self.collaborators_per_author.to_string(),
            ),
            ("giant_size", self.giant_size.to_string()),
            ("giant_pct", self.giant_pct.to_string()),
            ("second_component", self.second_component.to_string()),
            (
                "clustering_avg_local",
                self.clustering_avg_local.to_string(),
            ),
            (
                "clustering_transitivity",
                self.clustering_transitivity.to_string(),
            ),
            ("mean_distance", self.mean_distance.to_string()),
            ("diameter", self.diameter.to_string()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{expand, PaperRecord, RelevanceSpec};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn rec(id: &str, authors: &[&str]) -> PaperRecord {
        PaperRecord {
            id: id.into(),
            title: "Evolutionary Computation".into(),
            venue: "v".into(),
            year: 2000,
            authors: authors.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn report_of(corpus: &[PaperRecord], seeds: &[&str]) -> MacroReport {
        let spec = RelevanceSpec {
            keywords: vec!["Evolutionary Computation".into()],
            acronyms: vec![],
        };
        let seeds: BTreeSet<String> = seeds.iter().map(|s| s.to_string()).collect();
        let sel = expand(corpus, &seeds, &spec);
        let g = crate::graph::build_graph(&sel, corpus).unwrap();
        macro_report(&g, &sel).unwrap()
    }

    #[test]
    fn triangle_report() {
        let r = report_of(&[rec("p1", &["A", "B", "C"])], &["A"]);
        assert_eq!(r.total_papers, 1);
        assert_eq!(r.total_authors, 3);
        assert_eq!(r.mean_papers_per_author, 1.0);
        assert_eq!(r.mean_authors_per_paper, 3.0);
        assert_eq!(r.collaborators_per_author, 2.0);
        assert_eq!(r.giant_size, 3);
        assert_eq!(r.giant_pct, 100.0);
        assert_eq!(r.second_component, 0);
        assert_eq!(r.clustering_avg_local, 1.0);
        assert_eq!(r.clustering_transitivity, 1.0);
        assert_eq!(r.mean_distance, 1.0);
        assert_eq!(r.diameter, 1);
    }

    #[test]
    fn path_report() {
        let r = report_of(&[rec("p1", &["A", "B"]), rec("p2", &["B", "C"])], &["A"]);
        assert_eq!(r.clustering_avg_local, 0.0);
        assert_eq!(r.clustering_transitivity, 0.0);
        assert!((r.mean_distance - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.diameter, 2);
    }

    #[test]
    fn empty_network_is_an_error() {
        let corpus = vec![rec("p1", &["A"])];
        let sel = expand(&corpus, &BTreeSet::new(), &relevance());
        let g = crate::graph::build_graph(&sel, &corpus).unwrap();
        let err = macro_report(&g, &sel).unwrap_err();
        assert_eq!(err.to_string(), "empty network");
    }

    fn relevance() -> RelevanceSpec {
        RelevanceSpec {
            keywords: vec!["Evolutionary Computation".into()],
            acronyms: vec![],
        }
    }

    #[test]
    fn distances_ignore_smaller_components() {
        // Triangle {A,B,C} plus the separate pair {D,E}.
        let r = report_of(
            &[rec("p1", &["A", "B", "C"]), rec("p2", &["D", "E"])],
            &["A", "D"],
        );
        assert_eq!(r.giant_size, 3);
        assert_eq!(r.second_component, 2);
        assert_eq!(r.mean_distance, 1.0);
        assert_eq!(r.diameter, 1);
        assert!((r.giant_pct - 60.0).abs() < 1e-12);
    }

    #[test]
    fn singleton_network_degenerates_to_zero_distances() {
        let r = report_of(&[rec("p1", &["A"])], &["A"]);
        assert_eq!(r.giant_size, 1);
        assert_eq!(r.mean_distance, 0.0);
        assert_eq!(r.diameter, 0);
        assert_eq!(r.clustering_avg_local, 0.0);
        assert_eq!(r.clustering_transitivity, 0.0);
    }

    #[test]
    fn csv_is_flat_key_value() {
        let r = report_of(&[rec("p1", &["A", "B", "C"])], &["A"]);
        let mut out = Vec::new();
        r.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("key,value\ntotal_papers,1\ntotal_authors,3\n"));
        assert!(text.contains("\nclustering_avg_local,1\n"));
        assert!(text.ends_with("\ndiameter,1\n"));
    }

    #[test]
    fn json_line_uses_field_names() {
        let r = report_of(&[rec("p1", &["A", "B", "C"])], &["A"]);
        let mut out = Vec::new();
        r.write_json_line(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.ends_with('\n'));
        let v: serde_json::Value = serde_json::from_str(text.trim_end()).unwrap();
        assert_eq!(v["total_papers"], 1);
        assert_eq!(v["collaborators_per_author"], 2.0);
    }

    // Brute-force oracles for the property tests.
    fn brute_triangles(g: &crate::graph::CoauthGraph) -> usize {
        let n = g.node_count();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn floyd_warshall(g: &crate::graph::CoauthGraph) -> Vec<Vec<Option<u32>>> {
        let n = g.node_count();
        let mut d = vec![vec![None; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = Some(0);
        }
        for (u, v, _) in g.edges() {
            d[u][v] = Some(1);
            d[v][u] = Some(1);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    fn arbitrary_graph(n: usize) -> impl Strategy<Value = crate::graph::CoauthGraph> {
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        prop::sample::subsequence(all.clone(), 0..=all.len()).prop_map(move |edges| {
            let names = (0..n).map(|i| format!("n{i:02}")).collect();
            crate::graph::CoauthGraph::from_edges(names, &edges)
        })
    }

    fn report_for_graph(g: &crate::graph::CoauthGraph) -> MacroReport {
        // Fabricate a matching one-paper-per-author selection; the
        // distance and clustering fields only depend on the graph.
        let mut sel = crate::corpus::CorpusSelection::default();
        for i in 0..g.node_count() {
            sel.papers.insert(format!("p{i}"));
            sel.authors
                .insert(g.node_name(i).to_string(), crate::corpus::Provenance::Seed);
        }
        macro_report(g, &sel).unwrap()
    }

    proptest! {
        #[test]
        fn transitivity_matches_brute_force(g in arbitrary_graph(12)) {
            let r = report_for_graph(&g);
            let triples: usize = (0..g.node_count())
                .map(|i| {
                    let d = g.degree(i);
                    d * d.saturating_sub(1) / 2
                })
                .sum();
            let expected = if triples > 0 {
                3.0 * brute_triangles(&g) as f64 / triples as f64
            } else {
                0.0
            };
            prop_assert!((r.clustering_transitivity - expected).abs() < 1e-12);
        }

        #[test]
        fn diameter_matches_all_pairs_oracle(g in arbitrary_graph(12)) {
            let r = report_for_graph(&g);
            let cm = crate::graph::components(&g);
            let giant = cm.nodes_of(0);
            let d = floyd_warshall(&g);
            let mut max = 0u32;
            let mut sum = 0u64;
            for &u in &giant {
                for &v in &giant {
                    if u != v {
                        let duv = d[u][v].expect("giant is connected");
                        max = max.max(duv);
                        sum += u64::from(duv);
                    }
                }
            }
            prop_assert_eq!(r.diameter, max);
            if giant.len() >= 2 {
                let mean = sum as f64 / (giant.len() * (giant.len() - 1)) as f64;
                prop_assert!((r.mean_distance - mean).abs() < 1e-12);
            }
        }

        #[test]
        fn report_invariants_hold(g in arbitrary_graph(10)) {
            let r = report_for_graph(&g);
            prop_assert!(r.giant_size >= r.second_component);
            prop_assert!((0.0..=100.0).contains(&r.giant_pct));
            let pct = 100.0 * r.giant_size as f64 / r.total_authors as f64;
            prop_assert_eq!(r.giant_pct, pct);
            prop_assert!((0.0..=1.0).contains(&r.clustering_avg_local));
            prop_assert!((0.0..=1.0).contains(&r.clustering_transitivity));
            if r.giant_size >= 2 {
                prop_assert!(f64::from(r.diameter) >= r.mean_distance);
            }
            // Ratio identities: mean · denominator recovers the sums.
            let signatures: usize = (0..g.node_count()).map(|i| g.paper_count(i)).sum();
            let lhs = r.mean_papers_per_author * r.total_authors as f64;
            prop_assert!((lhs - signatures as f64).abs() < 1e-9);
            let lhs = r.mean_authors_per_paper * r.total_papers as f64;
            prop_assert!((lhs - signatures as f64).abs() < 1e-9);
        }
    }
}
