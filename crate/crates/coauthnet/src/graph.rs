//! The undirected co-authorship graph and the traversal primitives shared
//! by every downstream analysis: BFS geodesics with path counting and
//! connected components.
//!
//! Two authors are joined by an edge when they co-sign at least one
//! selected paper. The analysis graph is simple and unweighted; how many
//! papers a pair co-signed is kept as reporting metadata only.

use crate::corpus::{CorpusSelection, PaperRecord};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::io::Write;
use thiserror::Error;

/// Immutable co-authorship graph over dense node indices.
///
/// Nodes are indexed `0..n` in lexicographic author-name order when built
/// through [`build_graph`], which makes every downstream ranking
/// reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoauthGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    paper_count: Vec<usize>,
    // (u, v) with u < v -> number of co-signed papers.
    edge_papers: BTreeMap<(usize, usize), usize>,
}

impl CoauthGraph {
    /// Build a graph directly from named nodes and an edge list, each edge
    /// counting as one co-signed paper. Nodes keep the given order; every
    /// node gets a paper count of 1. Self-loops are rejected, repeated
    /// edges are merged.
    pub fn from_edges(names: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let n = names.len();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), i))
            .collect();
        let mut edge_papers: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(a, b) in edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            assert_ne!(a, b, "self-loops are not allowed");
            let key = (a.min(b), a.max(b));
            *edge_papers.entry(key).or_insert(0) += 1;
        }
        let adj = adjacency_from_pairs(n, edge_papers.keys().copied());
        CoauthGraph {
            names,
            index,
            adj,
            paper_count: vec![1; n],
            edge_papers,
        }
    }

    /// Rebuild a graph from previously exported parts: node names with
    /// their paper counts (in index order) and `(u, v, papers)` edges with
    /// `u < v`. Validates the shape so corrupt artifacts are rejected.
    pub fn from_parts(
        names: Vec<String>,
        paper_count: Vec<usize>,
        edges: Vec<(usize, usize, usize)>,
    ) -> Result<Self, GraphError> {
        let n = names.len();
        let bad = |reason: String| GraphError::BadParts { reason };
        if paper_count.len() != n {
            return Err(bad(format!(
                "{} paper counts for {} nodes",
                paper_count.len(),
                n
            )));
        }
        if let Some(i) = paper_count.iter().position(|&c| c == 0) {
            return Err(GraphError::AuthorWithoutPapers {
                author: names[i].clone(),
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(bad(format!("duplicate author {name:?}")));
            }
        }
        let mut edge_papers = BTreeMap::new();
        for &(u, v, papers) in &edges {
            if u >= v || v >= n {
                return Err(bad(format!("edge ({u}, {v}) is not ordered within range")));
            }
            if papers == 0 {
                return Err(bad(format!("edge ({u}, {v}) has a zero paper count")));
            }
            if edge_papers.insert((u, v), papers).is_some() {
                return Err(bad(format!("duplicate edge ({u}, {v})")));
            }
        }
        let adj = adjacency_from_pairs(n, edge_papers.keys().copied());
        Ok(CoauthGraph {
            names,
            index,
            adj,
            paper_count,
            edge_papers,
        })
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_papers.len()
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Number of selected papers signed by node `i`.
    pub fn paper_count(&self, i: usize) -> usize {
        self.paper_count[i]
    }

    /// Edges as `(u, v, papers_count)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edge_papers.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_papers.contains_key(&(u.min(v), u.max(v)))
    }

    /// Edge-list export: CSV `author_a,author_b,papers_count` with
    /// `author_a <= author_b` lexicographically.
    pub fn write_edge_list<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["author_a", "author_b", "papers_count"])?;
        for (u, v, papers) in self.edges() {
            w.write_record([&self.names[u], &self.names[v], &papers.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn adjacency_from_pairs(n: usize, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (u, v) in pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("selection references paper {id:?}, which is absent from the corpus")]
    DanglingPaper { id: String },
    #[error("paper {id:?} is signed by {author:?}, which is missing from the selection")]
    UnknownAuthor { id: String, author: String },
    #[error("author {author:?} is selected but signs no selected paper")]
    AuthorWithoutPapers { author: String },
    #[error("invalid graph data: {reason}")]
    BadParts { reason: String },
}

/// Build the co-authorship graph for a selection.
///
/// The node set is exactly the selection's authors, indexed in
/// lexicographic name order. Two distinct authors share an edge iff they
/// co-sign at least one selected paper; the per-edge paper count is
/// retained as metadata. Single-author papers contribute a node and a
/// paper count but no edges.
pub fn build_graph(
    selection: &CorpusSelection,
    corpus: &[PaperRecord],
) -> Result<CoauthGraph, GraphError> {
    // BTreeMap keys are already in lexicographic order.
    let names: Vec<String> = selection.authors.keys().cloned().collect();
    let index: HashMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, name)| (name.clone(), i))
        .collect();

    let by_id: HashMap<&str, &PaperRecord> =
        corpus.iter().map(|rec| (rec.id.as_str(), rec)).collect();

    let mut paper_count = vec![0usize; names.len()];
    let mut edge_papers: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for id in &selection.papers {
        let rec = by_id
            .get(id.as_str())
            .ok_or_else(|| GraphError::DanglingPaper { id: id.clone() })?;
        let mut nodes = Vec::with_capacity(rec.authors.len());
        for author in &rec.authors {
            let &i = index.get(author).ok_or_else(|| GraphError::UnknownAuthor {
                id: id.clone(),
                author: author.clone(),
            })?;
            paper_count[i] += 1;
            nodes.push(i);
        }
        nodes.sort_unstable();
        for (k, &u) in nodes.iter().enumerate() {
            for &v in &nodes[k + 1..] {
                *edge_papers.entry((u, v)).or_insert(0) += 1;
            }
        }
    }
    if let Some(i) = paper_count.iter().position(|&c| c == 0) {
        return Err(GraphError::AuthorWithoutPapers {
            author: names[i].clone(),
        });
    }

    let adj = adjacency_from_pairs(names.len(), edge_papers.keys().copied());
    Ok(CoauthGraph {
        names,
        index,
        adj,
        paper_count,
        edge_papers,
    })
}

/// Geodesic distances and path counts from one source.
///
/// `dist[v]` is `None` when `v` is unreachable, in which case
/// `sigma[v] == 0`. Counts are exact while they fit in a `u64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
    pub sigma: Vec<u64>,
}

/// Full BFS result for one source, including the shortest-path DAG needed
/// by dependency accumulation.
pub(crate) struct ShortestPathTree {
    pub dist: Vec<Option<u32>>,
    pub sigma: Vec<u64>,
    pub preds: Vec<Vec<usize>>,
    /// Visitation order; distances are non-decreasing along it.
    pub order: Vec<usize>,
}

pub(crate) fn shortest_path_tree(g: &CoauthGraph, source: usize) -> ShortestPathTree {
    let n = g.node_count();
    assert!(source < n, "source out of range");
    let mut dist: Vec<Option<u32>> = vec![None; n];
    let mut sigma = vec![0u64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    dist[source] = Some(0);
    sigma[source] = 1;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let next = dist[v].unwrap() + 1;
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(next);
                queue.push_back(w);
            }
            if dist[w] == Some(next) {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }
    ShortestPathTree {
        dist,
        sigma,
        preds,
        order,
    }
}

/// Exact unweighted shortest-path lengths and geodesic counts from
/// `source`. Panics if `source` is out of range.
pub fn bfs_row(g: &CoauthGraph, source: usize) -> DistanceRow {
    let tree = shortest_path_tree(g, source);
    DistanceRow {
        source,
        dist: tree.dist,
        sigma: tree.sigma,
    }
}

/// Partition of the nodes into connected components.
///
/// Components are numbered `0..count` by decreasing size, ties broken by
/// the smallest contained node index; `sizes[c]` is the size of component
/// `c`, so `sizes` is sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    pub component_of: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentMap {
    pub fn component_count(&self) -> usize {
        self.sizes.len()
    }

    /// Size of the giant component; 0 for an empty graph.
    pub fn giant_size(&self) -> usize {
        self.sizes.first().copied().unwrap_or(0)
    }

    /// Size of the second-largest component; 0 when there is at most one.
    pub fn second_size(&self) -> usize {
        self.sizes.get(1).copied().unwrap_or(0)
    }

    /// Node indices of component `c`, ascending.
    pub fn nodes_of(&self, c: usize) -> Vec<usize> {
        self.component_of
            .iter()
            .enumerate()
            .filter(|&(_, &cc)| cc == c)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Connected components via a full BFS sweep.
pub fn components(g: &CoauthGraph) -> ComponentMap {
    let n = g.node_count();
    let mut raw = vec![usize::MAX; n];
    // (size, first node) per discovery-ordered component; the sweep is in
    // ascending node order, so the first node is the smallest.
    let mut stats: Vec<(usize, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if raw[start] != usize::MAX {
            continue;
        }
        let c = stats.len();
        let mut size = 0;
        raw[start] = c;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &w in g.neighbors(v) {
                if raw[w] == usize::MAX {
                    raw[w] = c;
                    queue.push_back(w);
                }
            }
        }
        stats.push((size, start));
    }

    let mut by_size: Vec<usize> = (0..stats.len()).collect();
    by_size.sort_by_key(|&c| (std::cmp::Reverse(stats[c].0), stats[c].1));
    let mut relabel = vec![0usize; stats.len()];
    for (new, &old) in by_size.iter().enumerate() {
        relabel[old] = new;
    }
    ComponentMap {
        component_of: raw.into_iter().map(|c| relabel[c]).collect(),
        sizes: by_size.iter().map(|&c| stats[c].0).collect(),
    }
}
