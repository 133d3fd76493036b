//! Regenerates the bundled synthetic corpus under `data/`.
//!
//! The bundled files are committed, so running this is only needed when the
//! corpus layout itself changes. The generator is fully deterministic: a
//! fixed ChaCha8 seed drives every draw, and sampling goes through raw
//! `next_u64` helpers so the byte output does not depend on `rand`'s
//! distribution internals.
//!
//! Anatomy of the corpus (200 records, shuffled into one file):
//!
//! * **Main community** — 60 authors, 130 papers grown by preferential
//!   attachment (frequent authors are more likely to sign the next paper),
//!   giving a heavy-tailed collaboration count. Roughly a quarter of its
//!   relevant papers appear at the seed venue inside the seed window, so the
//!   community is seeded and selected; the irrelevant papers its members
//!   also sign are not.
//! * **Second community** — 15 authors, 25 papers, same recipe, author pool
//!   disjoint from the main community. Also seeded, so the selected graph
//!   has at least two components.
//! * **Island** — 8 authors and 12 papers that pass the relevance filter
//!   but never touch a seed venue and share no author with a seeded
//!   community. Expansion cannot reach them: relevance alone does not admit
//!   a paper.
//! * **Bridge decoys** — 3 irrelevant papers co-signed by an island author
//!   and a main-community author. Expansion only walks relevant papers, so
//!   these do not connect the island either.
//! * **Outsiders** — 12 authors and 29 papers with no relevant content at
//!   all; pure noise for the filter.
//! * **Solo seed** — 1 author whose only paper is single-author at the seed
//!   venue. Selected, but an isolated node of the graph.
//!
//! After writing `data/synthetic_corpus.jsonl` and `data/analysis_spec.json`
//! the generator re-reads them through the normal pipeline and asserts the
//! structural claims above, then prints a short summary.

use coauthnet::{
    build_graph, components, expand, is_relevant, seed_authors, AnalysisSpec, PaperRecord,
};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

const SEED: u64 = 0x5eed_c0de;
const FIRST_NAMES: &[&str] = &[
    "Alice", "Marco", "Wei", "Priya", "Jonas", "Elena", "Tomas", "Yuki", "Amara", "Pedro",
    "Ingrid", "Omar", "Sofia", "Daniel", "Mei", "Lukas", "Nadia", "Viktor", "Carla", "Hassan",
    "Greta", "Raj", "Anna", "Felix", "Noor", "Diego", "Hana", "Ivan", "Lucia", "Samuel",
];
const LAST_NAMES: &[&str] = &[
    "Varga",
    "Okafor",
    "Lindqvist",
    "Moreau",
    "Tanaka",
    "Novak",
    "Silva",
    "Haddad",
    "Berg",
    "Kowalski",
    "Fernandez",
    "Ito",
    "Schmid",
    "Rossi",
    "Petrov",
    "Nakamura",
    "Costa",
    "Jansen",
    "Ferreira",
    "Dubois",
    "Eriksson",
    "Mbeki",
    "Ramirez",
    "Chen",
    "Gupta",
    "Weber",
    "Sato",
    "Olsen",
    "Marino",
    "Khan",
];

const TOPICS: &[&str] = &[
    "Evolutionary computation",
    "A genetic algorithm",
    "Genetic programming",
    "Self-adaptive evolution strategies",
];
const APPLICATIONS: &[&str] = &[
    "multi-objective optimization",
    "symbolic regression",
    "the traveling salesman problem",
    "job-shop scheduling",
    "feature selection",
    "bin packing",
    "network design",
    "protein structure prediction",
];
/// Venues that are relevant on their own (keyword substring or acronym).
const RELEVANT_VENUES: &[&str] = &[
    "Evolutionary Computation",
    "Genetic Programming and Evolvable Machines",
    "PPSN",
];
/// Venues that say nothing either way; the title decides.
const NEUTRAL_VENUES: &[&str] = &[
    "Journal of Heuristics",
    "Soft Computing",
    "Applied Intelligence",
];
const NOISE_VENUES: &[&str] = &[
    "SIGMOD",
    "VLDB",
    "J. ACM",
    "Theoretical Computer Science",
    "Software: Practice and Experience",
];
const NOISE_TITLES: &[&str] = &[
    "Sorting networks revisited",
    "Cache-conscious data structures",
    "A note on B-tree concurrency",
    "Consensus in asynchronous systems",
    "Static analysis of pointer programs",
    "Query optimization for column stores",
    "Scheduling with precedence constraints",
    "Incremental view maintenance",
];

/// Uniform draw from `0..n` off the raw 64-bit stream. The modulo bias is
/// immaterial here; bit-for-bit stability of the output is what matters.
fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

/// True with probability `num/den`.
fn chance(rng: &mut ChaCha8Rng, num: u64, den: u64) -> bool {
    rng.next_u64() % den < num
}

fn pick<'a, T: ?Sized>(rng: &mut ChaCha8Rng, items: &'a [&T]) -> &'a T {
    items[below(rng, items.len())]
}

/// Fisher-Yates, again off the raw stream.
fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, below(rng, i + 1));
    }
}

fn relevant_title(rng: &mut ChaCha8Rng) -> String {
    match below(rng, 4) {
        0 => format!("{} for {}", pick(rng, TOPICS), pick(rng, APPLICATIONS)),
        1 => format!("{} with adaptive operators", pick(rng, TOPICS)),
        2 => "On premature convergence in genetic algorithms".to_string(),
        _ => format!(
            "Benchmarking {} on {}",
            pick(rng, TOPICS),
            pick(rng, APPLICATIONS)
        ),
    }
}

fn noise_title(rng: &mut ChaCha8Rng) -> String {
    pick(rng, NOISE_TITLES).to_string()
}

/// Draw a byline of `k` distinct authors, weighted by how often each author
/// has already signed (the urn holds one ball per signature plus one per
/// author). Byline order is draw order, as in real records.
fn draw_byline(rng: &mut ChaCha8Rng, urn: &[usize], names: &[String], k: usize) -> Vec<String> {
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    while picked.len() < k {
        let a = urn[below(rng, urn.len())];
        if !picked.contains(&a) {
            picked.push(a);
        }
    }
    picked.into_iter().map(|a| names[a].clone()).collect()
}

/// Byline size: mostly 2-3 authors, occasional solo papers and larger teams.
fn byline_size(rng: &mut ChaCha8Rng, max: usize) -> usize {
    let roll = rng.next_u64() % 100;
    let k = match roll {
        0..=14 => 1,
        15..=54 => 2,
        55..=84 => 3,
        85..=94 => 4,
        _ => 5,
    };
    k.min(max)
}

/// Grow one community: `n_papers` records over the given author pool, with
/// preferential attachment and the requested share of seed-venue papers.
fn community(
    rng: &mut ChaCha8Rng,
    authors: &[String],
    n_papers: usize,
    seed_share: (u64, u64),
) -> Vec<PaperRecord> {
    let mut urn: Vec<usize> = (0..authors.len()).collect();
    let mut records = Vec::with_capacity(n_papers);
    for _ in 0..n_papers {
        let k = byline_size(rng, authors.len());
        let byline = draw_byline(rng, &urn, authors, k);
        for name in &byline {
            urn.push(authors.iter().position(|a| a == name).unwrap());
        }
        let (title, venue, year) = if chance(rng, seed_share.0, seed_share.1) {
            // Seed-venue paper inside the window; relevant via the acronym.
            let venue = if chance(rng, 1, 4) {
                "Proc. GECCO"
            } else {
                "GECCO"
            };
            (
                relevant_title(rng),
                venue.to_string(),
                2002 + below(rng, 5) as i32,
            )
        } else if chance(rng, 7, 10) {
            // Ordinary relevant paper: relevant venue, or neutral venue with
            // a telling title.
            let (title, venue) = if chance(rng, 1, 2) {
                (relevant_title(rng), pick(rng, RELEVANT_VENUES).to_string())
            } else {
                (relevant_title(rng), pick(rng, NEUTRAL_VENUES).to_string())
            };
            (title, venue, 1999 + below(rng, 10) as i32)
        } else {
            // Community members publish off-topic too.
            (
                noise_title(rng),
                pick(rng, NOISE_VENUES).to_string(),
                1999 + below(rng, 10) as i32,
            )
        };
        records.push(PaperRecord {
            id: String::new(),
            title,
            venue,
            year,
            authors: byline,
        });
    }
    records
}

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    // One global pool of distinct names, handed out in slices.
    let mut pool: Vec<String> = FIRST_NAMES
        .iter()
        .flat_map(|f| LAST_NAMES.iter().map(move |l| format!("{f} {l}")))
        .collect();
    shuffle(&mut rng, &mut pool);
    let main_authors = &pool[0..60];
    let second_authors = &pool[60..75];
    let island_authors = &pool[75..83];
    let outsiders = &pool[83..95];
    let solo_seed = &pool[95];

    let mut records = Vec::new();
    records.extend(community(&mut rng, main_authors, 130, (1, 4)));
    records.extend(community(&mut rng, second_authors, 25, (1, 5)));
    // Island: relevant, never at the seed venue, authors disjoint from the
    // seeded communities.
    for _ in 0..12 {
        let k = byline_size(&mut rng, island_authors.len()).max(2);
        let urn: Vec<usize> = (0..island_authors.len()).collect();
        records.push(PaperRecord {
            id: String::new(),
            title: relevant_title(&mut rng),
            venue: pick(&mut rng, &[RELEVANT_VENUES[0], NEUTRAL_VENUES[0]]).to_string(),
            year: 1999 + below(&mut rng, 10) as i32,
            authors: draw_byline(&mut rng, &urn, island_authors, k),
        });
    }
    // Bridge decoys: island and main-community authors co-sign noise papers.
    for _ in 0..3 {
        let a = island_authors[below(&mut rng, island_authors.len())].clone();
        let b = main_authors[below(&mut rng, main_authors.len())].clone();
        records.push(PaperRecord {
            id: String::new(),
            title: noise_title(&mut rng),
            venue: pick(&mut rng, NOISE_VENUES).to_string(),
            year: 1999 + below(&mut rng, 10) as i32,
            authors: vec![a, b],
        });
    }
    // Outsiders: pure noise.
    for _ in 0..29 {
        let k = byline_size(&mut rng, outsiders.len());
        let urn: Vec<usize> = (0..outsiders.len()).collect();
        records.push(PaperRecord {
            id: String::new(),
            title: noise_title(&mut rng),
            venue: pick(&mut rng, NOISE_VENUES).to_string(),
            year: 1999 + below(&mut rng, 10) as i32,
            authors: draw_byline(&mut rng, &urn, outsiders, k),
        });
    }
    // Solo seed: a single-author seed-venue paper, nothing else.
    records.push(PaperRecord {
        id: String::new(),
        title: relevant_title(&mut rng),
        venue: "GECCO".to_string(),
        year: 2004,
        authors: vec![solo_seed.clone()],
    });

    assert_eq!(records.len(), 200);
    shuffle(&mut rng, &mut records);
    for (i, rec) in records.iter_mut().enumerate() {
        rec.id = format!("P{:04}", i + 1);
    }

    let data_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&data_dir)?;

    let spec_json = serde_json::json!({
        "keywords": [
            "evolutionary computation",
            "genetic programming",
            "genetic algorithm",
            "evolution strategies",
        ],
        "acronyms": ["GECCO", "PPSN"],
        "seed_venues": ["GECCO"],
        "window": { "start": 2002, "end": 2006 },
    });
    let spec_path = data_dir.join("analysis_spec.json");
    std::fs::write(&spec_path, format!("{spec_json}\n"))?;

    let corpus_path = data_dir.join("synthetic_corpus.jsonl");
    let mut out = BufWriter::new(File::create(&corpus_path)?);
    for rec in &records {
        writeln!(out, "{}", serde_json::to_string(rec)?)?;
    }
    out.flush()?;
    drop(out);

    // Re-read through the public pipeline and check the claims made above.
    let spec = AnalysisSpec::load(&spec_path)?;
    let corpus = coauthnet::parse_corpus(&corpus_path)?;
    let seeds = seed_authors(&corpus, &spec.seeds());
    let selection = expand(&corpus, &seeds, &spec.relevance());
    let graph = build_graph(&selection, &corpus)?;
    let comps = components(&graph);

    let island: BTreeSet<&String> = island_authors.iter().collect();
    assert!(
        selection.authors.keys().all(|a| !island.contains(a)),
        "island authors must stay unselected"
    );
    assert!(
        corpus
            .iter()
            .any(|r| is_relevant(r, &spec.relevance())
                && r.authors.iter().all(|a| island.contains(a))),
        "island papers must pass the relevance filter"
    );
    assert!(
        selection.authors.contains_key(solo_seed),
        "solo seed must be selected"
    );
    assert_eq!(graph.degree(graph.node_index(solo_seed).unwrap()), 0);
    assert!(
        comps.component_count() >= 2,
        "expected at least two components"
    );
    assert!(
        comps.second_size() >= 10,
        "second community should survive selection"
    );

    println!("wrote {}", corpus_path.display());
    println!("wrote {}", spec_path.display());
    println!(
        "corpus: {} records, {} seed authors, {} selected papers, {} selected authors",
        corpus.len(),
        seeds.len(),
        selection.papers.len(),
        selection.authors.len()
    );
    println!(
        "graph: {} nodes, {} edges, {} components (giant {}, second {})",
        graph.node_count(),
        graph.edge_count(),
        comps.component_count(),
        comps.giant_size(),
        comps.second_size()
    );
    Ok(())
}
