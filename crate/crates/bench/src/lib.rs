//! Inputs shared by the benchmarks.

use std::path::{Path, PathBuf};

use astchunk::corpus::{walk_repository, WalkOptions};
use astchunk::SourceDocument;

pub fn fixture_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures/corpus")
}

/// The fixture corpus, read once.
pub fn fixture_documents() -> Vec<SourceDocument> {
    walk_repository(&fixture_corpus_dir(), &WalkOptions::default())
        .expect("fixture corpus")
        .documents
}

/// Total bytes of `docs`.
pub fn total_bytes(docs: &[SourceDocument]) -> u64 {
    docs.iter().map(|d| d.len() as u64).sum()
}
