//! Corpus ingestion: bibliographic records, the relevance filter, and
//! seed-based recursive co-author expansion.
//!
//! Records are read from UTF-8 line-delimited JSON, one object per line.
//! The analysis corpus is selected by starting from a set of seed authors
//! (those who published in designated venues within a year window) and
//! recursively pulling in co-authors through relevant papers until a fixed
//! point is reached.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use thiserror::Error;

/// One bibliographic entry.
///
/// `authors` holds canonical author-name strings; identity is exact string
/// equality, with no disambiguation or merging.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PaperRecord {
    pub id: String,
    pub title: String,
    pub venue: String,
    pub year: i32,
    pub authors: Vec<String>,
}

/// Relevance predicate configuration. Keywords match as case-insensitive
/// substrings; acronyms match case-insensitive whole tokens (split on
/// non-alphanumeric characters). Both are searched in the title and the
/// venue — those two fields are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelevanceSpec {
    pub keywords: Vec<String>,
    pub acronyms: Vec<String>,
}

impl RelevanceSpec {
    /// At least one keyword or acronym must be present.
    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.keywords.is_empty() && self.acronyms.is_empty() {
            return Err(CorpusError::EmptyRelevanceSpec);
        }
        Ok(())
    }
}

/// Inclusive calendar-year range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YearWindow {
    pub start: i32,
    pub end: i32,
}

impl YearWindow {
    pub fn contains(&self, year: i32) -> bool {
        self.start <= year && year <= self.end
    }
}

/// Seed-author selection: authors with at least one paper whose venue
/// token-matches one of `seed_venues` and whose year falls in `window`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSpec {
    pub seed_venues: Vec<String>,
    pub window: YearWindow,
}

impl SeedSpec {
    pub fn validate(&self) -> Result<(), CorpusError> {
        if self.window.start > self.window.end {
            return Err(CorpusError::BadWindow {
                start: self.window.start,
                end: self.window.end,
            });
        }
        Ok(())
    }
}

/// Combined configuration file contents: one JSON object on a single line
/// carrying both the relevance and the seed specification.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSpec {
    #[serde(default)]
    pub keywords: Vec<String>,
    #[serde(default)]
    pub acronyms: Vec<String>,
    pub seed_venues: Vec<String>,
    pub window: YearWindow,
}

impl AnalysisSpec {
    /// Read and validate the configuration from a single-object file.
    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let spec: AnalysisSpec = serde_json::from_str(text.trim())
            .map_err(|source| CorpusError::Parse { line: 1, source })?;
        spec.relevance().validate()?;
        spec.seeds().validate()?;
        Ok(spec)
    }

    pub fn relevance(&self) -> RelevanceSpec {
        RelevanceSpec {
            keywords: self.keywords.clone(),
            acronyms: self.acronyms.clone(),
        }
    }

    pub fn seeds(&self) -> SeedSpec {
        SeedSpec {
            seed_venues: self.seed_venues.clone(),
            window: self.window,
        }
    }
}

/// Whether an author entered the selection as an original seed or through
/// co-author expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Seed,
    Expanded,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Seed => "seed",
            Provenance::Expanded => "expanded",
        }
    }
}

/// Result of the seed expansion: the selected paper ids and the authors
/// signing them, each tagged with its provenance.
///
/// Every author in `authors` signs at least one paper in `papers`. A seed
/// with no relevant paper of its own contributes nothing and is absent.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSelection {
    pub papers: BTreeSet<String>,
    pub authors: BTreeMap<String, Provenance>,
    /// Seeds that never occur in the corpus; ignored, but counted so the
    /// caller can warn.
    pub ignored_seeds: usize,
}

impl CorpusSelection {
    /// Selected paper ids, one per line.
    pub fn write_paper_ids<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for id in &self.papers {
            writeln!(out, "{id}")?;
        }
        Ok(())
    }

    /// Author manifest as CSV: `author,provenance`, sorted by name.
    pub fn write_author_manifest<W: Write>(&self, out: W) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["author", "provenance"])?;
        for (name, prov) in &self.authors {
            w.write_record([name.as_str(), prov.as_str()])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: duplicate paper id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: paper {id:?} has an empty author list")]
    NoAuthors { line: usize, id: String },
    #[error("line {line}: paper {id:?} lists author {author:?} more than once")]
    DuplicateAuthor {
        line: usize,
        id: String,
        author: String,
    },
    #[error("at least one keyword or acronym is required")]
    EmptyRelevanceSpec,
    #[error("year window start {start} exceeds end {end}")]
    BadWindow { start: i32, end: i32 },
}

/// Parse a line-delimited record file, preserving order.
///
/// Rejects malformed lines (carrying the 1-based line number), unknown
/// fields, duplicate ids, empty author lists, and repeated author names
/// within one record.
pub fn parse_corpus(path: &Path) -> Result<Vec<PaperRecord>, CorpusError> {
    let file = File::open(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let reader = BufReader::new(file);

    let mut records = Vec::new();
    let mut seen_ids = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let rec: PaperRecord =
            serde_json::from_str(&line).map_err(|source| CorpusError::Parse {
                line: line_no,
                source,
            })?;
        validate_record(&rec, line_no)?;
        if !seen_ids.insert(rec.id.clone()) {
            return Err(CorpusError::DuplicateId {
                line: line_no,
                id: rec.id,
            });
        }
        records.push(rec);
    }
    Ok(records)
}

fn validate_record(rec: &PaperRecord, line: usize) -> Result<(), CorpusError> {
    if rec.authors.is_empty() {
        return Err(CorpusError::NoAuthors {
            line,
            id: rec.id.clone(),
        });
    }
    let mut seen = HashSet::new();
    for author in &rec.authors {
        if !seen.insert(author.as_str()) {
            return Err(CorpusError::DuplicateAuthor {
                line,
                id: rec.id.clone(),
                author: author.clone(),
            });
        }
    }
    Ok(())
}

fn contains_ci(haystack: &str, needle_lower: &str) -> bool {
    haystack.to_lowercase().contains(needle_lower)
}

fn token_match_ci(haystack: &str, token_lower: &str) -> bool {
    haystack
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .any(|t| t.to_lowercase() == token_lower)
}

/// True iff any keyword is a case-insensitive substring of the title or
/// venue, or any acronym matches a whole token of either field.
pub fn is_relevant(rec: &PaperRecord, spec: &RelevanceSpec) -> bool {
    let fields = [rec.title.as_str(), rec.venue.as_str()];
    spec.keywords.iter().any(|kw| {
        let kw = kw.to_lowercase();
        fields.iter().any(|f| contains_ci(f, &kw))
    }) || spec.acronyms.iter().any(|ac| {
        let ac = ac.to_lowercase();
        fields.iter().any(|f| token_match_ci(f, &ac))
    })
}

/// Authors of papers whose venue token-matches a seed venue and whose year
/// lies in the window.
pub fn seed_authors(corpus: &[PaperRecord], seeds: &SeedSpec) -> BTreeSet<String> {
    let venues_lower: Vec<String> = seeds.seed_venues.iter().map(|v| v.to_lowercase()).collect();
    let mut out = BTreeSet::new();
    for rec in corpus {
        if !seeds.window.contains(rec.year) {
            continue;
        }
        if venues_lower.iter().any(|v| token_match_ci(&rec.venue, v)) {
            out.extend(rec.authors.iter().cloned());
        }
    }
    out
}

/// Recursive co-author expansion from a seed set.
///
/// Each frontier author contributes all of their relevant papers; every
/// co-author on those papers joins the frontier until no new author
/// appears. The selected paper set is the union of relevant papers over
/// all visited authors, and the author set is exactly the signatories of
/// the selected papers. Seeds absent from the corpus are counted in
/// `ignored_seeds`. The result is a set fixed point, independent of
/// frontier processing order.
pub fn expand(
    corpus: &[PaperRecord],
    seeds: &BTreeSet<String>,
    spec: &RelevanceSpec,
) -> CorpusSelection {
    let mut papers_of: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, rec) in corpus.iter().enumerate() {
        for author in &rec.authors {
            papers_of.entry(author.as_str()).or_default().push(i);
        }
    }
    let relevant: Vec<bool> = corpus.iter().map(|r| is_relevant(r, spec)).collect();

    let mut visited: HashSet<&str> = HashSet::new();
    let mut frontier: VecDeque<&str> = VecDeque::new();
    let mut ignored_seeds = 0;
    for seed in seeds {
        if papers_of.contains_key(seed.as_str()) {
            if visited.insert(seed.as_str()) {
                frontier.push_back(seed.as_str());
            }
        } else {
            ignored_seeds += 1;
        }
    }

    let mut selected: BTreeSet<usize> = BTreeSet::new();
    while let Some(author) = frontier.pop_front() {
        for &p in &papers_of[author] {
            if !relevant[p] {
                continue;
            }
            selected.insert(p);
            for coauthor in &corpus[p].authors {
                if visited.insert(coauthor.as_str()) {
                    frontier.push_back(coauthor.as_str());
                }
            }
        }
    }

    let mut papers = BTreeSet::new();
    let mut authors = BTreeMap::new();
    for &p in &selected {
        papers.insert(corpus[p].id.clone());
        for author in &corpus[p].authors {
            let prov = if seeds.contains(author) {
                Provenance::Seed
            } else {
                Provenance::Expanded
            };
            authors.insert(author.clone(), prov);
        }
    }

    CorpusSelection {
        papers,
        authors,
        ignored_seeds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rec(id: &str, title: &str, venue: &str, year: i32, authors: &[&str]) -> PaperRecord {
        PaperRecord {
            id: id.into(),
            title: title.into(),
            venue: venue.into(),
            year,
            authors: authors.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn ec_spec() -> RelevanceSpec {
        RelevanceSpec {
            keywords: vec![
                "Evolutionary Computation".into(),
                "Genetic Programming".into(),
            ],
            acronyms: vec!["GECCO".into(), "PPSN".into()],
        }
    }

    fn write_lines(lines: &[&str]) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        for line in lines {
            writeln!(f, "{line}").unwrap();
        }
        f.flush().unwrap();
        f
    }

    #[test]
    fn parse_empty_file() {
        let f = write_lines(&[]);
        assert!(parse_corpus(f.path()).unwrap().is_empty());
    }

    #[test]
    fn parse_single_record() {
        let f =
            write_lines(&[r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":["A"]}"#]);
        let recs = parse_corpus(f.path()).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].id, "p1");
        assert_eq!(recs[0].year, 2005);
    }

    #[test]
    fn parse_rejects_duplicate_id() {
        let f = write_lines(&[
            r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":["A"]}"#,
            r#"{"id":"p1","title":"u","venue":"w","year":2006,"authors":["B"]}"#,
        ]);
        match parse_corpus(f.path()) {
            Err(CorpusError::DuplicateId { line, id }) => {
                assert_eq!(line, 2);
                assert_eq!(id, "p1");
            }
            other => panic!("expected duplicate-id error, got {other:?}"),
        }
    }

    #[test]
    fn parse_error_carries_line_number() {
        let f = write_lines(&[
            r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":["A"]}"#,
            "not json",
        ]);
        match parse_corpus(f.path()) {
            Err(CorpusError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_unknown_fields() {
        let f = write_lines(&[
            r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":["A"],"doi":"x"}"#,
        ]);
        assert!(matches!(
            parse_corpus(f.path()),
            Err(CorpusError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn parse_rejects_empty_and_duplicate_authors() {
        let f = write_lines(&[r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":[]}"#]);
        assert!(matches!(
            parse_corpus(f.path()),
            Err(CorpusError::NoAuthors { line: 1, .. })
        ));
        let f = write_lines(&[
            r#"{"id":"p1","title":"t","venue":"v","year":2005,"authors":["A","A"]}"#,
        ]);
        assert!(matches!(
            parse_corpus(f.path()),
            Err(CorpusError::DuplicateAuthor { line: 1, .. })
        ));
    }

    #[test]
    fn relevance_keyword_in_title() {
        let spec = RelevanceSpec {
            keywords: vec!["Genetic Programming".into()],
            acronyms: vec![],
        };
        assert!(is_relevant(
            &rec("p", "A Genetic Programming study", "J. X", 2001, &["A"]),
            &spec
        ));
    }

    #[test]
    fn relevance_acronym_in_venue() {
        let spec = RelevanceSpec {
            keywords: vec![],
            acronyms: vec!["GECCO".into()],
        };
        assert!(is_relevant(&rec("p", "t", "GECCO", 2004, &["A"]), &spec));
        assert!(is_relevant(
            &rec("p", "t", "Proc. gecco 2004", 2004, &["A"]),
            &spec
        ));
        // Whole-token only: no match inside a longer word.
        assert!(!is_relevant(&rec("p", "t", "GECCOX", 2004, &["A"]), &spec));
    }

    #[test]
    fn relevance_no_match() {
        let spec = RelevanceSpec {
            keywords: vec!["Evolutionary Computation".into()],
            acronyms: vec![],
        };
        assert!(!is_relevant(
            &rec("p", "Sorting networks", "TCS", 1999, &["A"]),
            &spec
        ));
    }

    #[test]
    fn seed_authors_window_and_venue() {
        let seeds = SeedSpec {
            seed_venues: vec!["PPSN".into()],
            window: YearWindow {
                start: 2002,
                end: 2006,
            },
        };
        assert!(seed_authors(&[], &seeds).is_empty());

        let corpus = vec![rec("p1", "t", "PPSN", 2004, &["A", "B"])];
        let got = seed_authors(&corpus, &seeds);
        assert_eq!(got, BTreeSet::from(["A".to_string(), "B".to_string()]));

        let corpus = vec![rec("p1", "t", "PPSN", 1999, &["A", "B"])];
        assert!(seed_authors(&corpus, &seeds).is_empty());
    }

    /// Three-record corpus used by the expansion examples: p1 and p2 are
    /// relevant, p3 is not.
    fn trace_corpus() -> Vec<PaperRecord> {
        vec![
            rec(
                "p1",
                "Evolutionary Computation in practice",
                "J. A",
                2004,
                &["A", "B"],
            ),
            rec(
                "p2",
                "More Evolutionary Computation",
                "J. B",
                2005,
                &["B", "C"],
            ),
            rec("p3", "Sorting networks", "SIGMOD", 2005, &["C", "D"]),
        ]
    }

    #[test]
    fn expand_empty_seeds() {
        let sel = expand(&trace_corpus(), &BTreeSet::new(), &ec_spec());
        assert!(sel.papers.is_empty());
        assert!(sel.authors.is_empty());
    }

    #[test]
    fn expand_reaches_coauthors_of_coauthors() {
        let seeds = BTreeSet::from(["A".to_string()]);
        let sel = expand(&trace_corpus(), &seeds, &ec_spec());
        assert_eq!(
            sel.papers,
            BTreeSet::from(["p1".to_string(), "p2".to_string()])
        );
        assert_eq!(
            sel.authors.keys().cloned().collect::<Vec<_>>(),
            vec!["A", "B", "C"]
        );
        assert_eq!(sel.authors["A"], Provenance::Seed);
        assert_eq!(sel.authors["B"], Provenance::Expanded);
        assert_eq!(sel.ignored_seeds, 0);
    }

    #[test]
    fn expand_seed_without_relevant_papers_selects_nothing() {
        let seeds = BTreeSet::from(["D".to_string()]);
        let sel = expand(&trace_corpus(), &seeds, &ec_spec());
        assert!(sel.papers.is_empty());
        assert!(sel.authors.is_empty());
    }

    #[test]
    fn expand_counts_unknown_seeds() {
        let seeds = BTreeSet::from(["A".to_string(), "nobody".to_string()]);
        let sel = expand(&trace_corpus(), &seeds, &ec_spec());
        assert_eq!(sel.ignored_seeds, 1);
        assert_eq!(sel.papers.len(), 2);
    }

    #[test]
    fn manifest_and_paper_id_output() {
        let seeds = BTreeSet::from(["A".to_string()]);
        let sel = expand(&trace_corpus(), &seeds, &ec_spec());
        let mut ids = Vec::new();
        sel.write_paper_ids(&mut ids).unwrap();
        assert_eq!(String::from_utf8(ids).unwrap(), "p1\np2\n");
        let mut manifest = Vec::new();
        sel.write_author_manifest(&mut manifest).unwrap();
        assert_eq!(
            String::from_utf8(manifest).unwrap(),
            "author,provenance\nA,seed\nB,expanded\nC,expanded\n"
        );
    }

    // Small random corpora for the expansion properties: a handful of
    // authors, papers of 1-3 signatories, roughly half relevant by title.
    fn corpus_strategy() -> impl Strategy<Value = Vec<PaperRecord>> {
        let author = prop::sample::select(vec!["A", "B", "C", "D", "E", "F"]);
        let authors = prop::collection::btree_set(author, 1..=3);
        let paper = (authors, prop::bool::ANY).prop_map(|(set, relevant)| {
            let title = if relevant {
                "Evolutionary Computation"
            } else {
                "Databases"
            };
            (set.into_iter().map(String::from).collect::<Vec<_>>(), title)
        });
        prop::collection::vec(paper, 0..8).prop_map(|papers| {
            papers
                .into_iter()
                .enumerate()
                .map(|(i, (authors, title))| PaperRecord {
                    id: format!("p{i}"),
                    title: title.into(),
                    venue: "v".into(),
                    year: 2000,
                    authors,
                })
                .collect()
        })
    }

    fn seeds_strategy() -> impl Strategy<Value = BTreeSet<String>> {
        prop::collection::btree_set(
            prop::sample::select(vec!["A", "B", "C", "D", "E", "F"]).prop_map(String::from),
            0..=4,
        )
    }

    proptest! {
        #[test]
        fn expansion_monotone_in_seeds(corpus in corpus_strategy(), seeds in seeds_strategy(), extra in seeds_strategy()) {
            let spec = ec_spec();
            let small = expand(&corpus, &seeds, &spec);
            let mut larger = seeds.clone();
            larger.extend(extra);
            let big = expand(&corpus, &larger, &spec);
            prop_assert!(small.papers.is_subset(&big.papers));
        }

        #[test]
        fn expansion_idempotent(corpus in corpus_strategy(), seeds in seeds_strategy()) {
            let spec = ec_spec();
            let first = expand(&corpus, &seeds, &spec);
            let again = expand(&corpus, &first.authors.keys().cloned().collect(), &spec);
            prop_assert_eq!(&first.papers, &again.papers);
            prop_assert_eq!(
                first.authors.keys().collect::<Vec<_>>(),
                again.authors.keys().collect::<Vec<_>>()
            );
        }

        #[test]
        fn expansion_closure(corpus in corpus_strategy(), seeds in seeds_strategy()) {
            let spec = ec_spec();
            let sel = expand(&corpus, &seeds, &spec);
            // Every selected author is reachable from a seed through a
            // chain of shared relevant selected papers.
            let mut reached: BTreeSet<&str> = seeds
                .iter()
                .map(String::as_str)
                .filter(|s| sel.authors.contains_key(*s))
                .collect();
            loop {
                let mut grew = false;
                for rec in &corpus {
                    if !sel.papers.contains(&rec.id) {
                        continue;
                    }
                    if rec.authors.iter().any(|a| reached.contains(a.as_str())) {
                        for a in &rec.authors {
                            grew |= reached.insert(a.as_str());
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            for author in sel.authors.keys() {
                prop_assert!(reached.contains(author.as_str()), "unreachable author {author}");
            }
        }
    }
}
