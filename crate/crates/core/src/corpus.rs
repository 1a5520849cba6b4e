//! Connected graphs on 1..=8 vertices, one per isomorphism class, shipped
//! as graph6 files (`data/connected{n}.g6`). They were enumerated by
//! `scripts/gen_corpus.py`, independently of this crate.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

pub const MAX_CORPUS_ORDER: usize = 8;

const EMBEDDED: [&str; MAX_CORPUS_ORDER] = [
    include_str!("../data/connected1.g6"),
    include_str!("../data/connected2.g6"),
    include_str!("../data/connected3.g6"),
    include_str!("../data/connected4.g6"),
    include_str!("../data/connected5.g6"),
    include_str!("../data/connected6.g6"),
    include_str!("../data/connected7.g6"),
    include_str!("../data/connected8.g6"),
];

/// Number of connected graphs per order, 1..=8.
pub const CONNECTED_COUNTS: [usize; MAX_CORPUS_ORDER] = [1, 1, 2, 6, 21, 112, 853, 11117];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    /// graph6 record as stored in the corpus file.
    pub name: String,
    pub graph: Graph,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
}

fn parse_file(text: &str, order: usize, origin: &str) -> Result<Vec<CorpusEntry>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| {
            let graph = parse_graph6(line).map_err(|e| Error::Corpus(format!("{origin}: {line:?}: {e}")))?;
            if graph.order() != order {
                return Err(Error::Corpus(format!(
                    "{origin}: {line:?} has {} vertices, expected {order}",
                    graph.order()
                )));
            }
            Ok(CorpusEntry { name: line.to_string(), graph })
        })
        .collect()
}

impl Corpus {
    /// The built-in corpus restricted to orders `1..=max_order`.
    pub fn embedded(max_order: usize) -> Result<Self> {
        let max_order = max_order.min(MAX_CORPUS_ORDER);
        let mut entries = Vec::new();
        for order in 1..=max_order {
            entries.extend(parse_file(EMBEDDED[order - 1], order, "embedded corpus")?);
        }
        Ok(Corpus { entries })
    }

    /// Loads `connected{n}.g6` for `n` in `1..=max_order` from `dir`.
    pub fn from_dir(dir: &Path, max_order: usize) -> Result<Self> {
        let mut entries = Vec::new();
        for order in 1..=max_order {
            let path = dir.join(format!("connected{order}.g6"));
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
            entries.extend(parse_file(&text, order, &path.display().to_string())?);
        }
        Ok(Corpus { entries })
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter()
    }
}
