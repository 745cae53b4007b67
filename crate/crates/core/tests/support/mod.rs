//! Shared helpers for integration tests.
#![allow(dead_code)]

pub mod cases;
pub mod oracle;

use std::ops::Range;
use std::path::{Path, PathBuf};

use astchunk::corpus::{walk_repository, WalkOptions};
use astchunk::document::count_non_ws;
use astchunk::{Chunk, ChunkingConfig, LanguageId, OversizePolicy, SourceDocument, SyntaxNode};

/// Resolves from any crate under `crates/`, so other test targets can include this module.
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures")
}

pub fn corpus_dir() -> PathBuf {
    fixtures_dir().join("corpus")
}

pub fn toy_repo_dir() -> PathBuf {
    fixtures_dir().join("toy_repo")
}

pub fn toy_queries_path() -> PathBuf {
    fixtures_dir().join("toy_queries.jsonl")
}

/// Every fixture file with a recognized language.
pub fn corpus_documents() -> Vec<SourceDocument> {
    let walked = walk_repository(&corpus_dir(), &WalkOptions::default()).expect("walk fixtures");
    assert!(walked.errors.is_empty(), "{:?}", walked.errors);
    walked.documents
}

/// The fixture corpus plus one generated Python file over 1 MB.
pub fn corpus_with_large_file() -> Vec<SourceDocument> {
    let mut docs = corpus_documents();
    docs.push(large_python_document(1 << 20));
    docs
}

/// Concatenates the Python fixtures until the text is at least `min_len` bytes.
pub fn large_python_document(min_len: usize) -> SourceDocument {
    let docs = corpus_documents();
    let sources: Vec<&SourceDocument> = docs
        .iter()
        .filter(|d| d.path().starts_with("python/"))
        .collect();
    let mut text = Vec::new();
    while text.len() < min_len {
        for d in &sources {
            text.extend_from_slice(d.bytes());
            text.push(b'\n');
        }
    }
    SourceDocument::new("generated/large.py", text, LanguageId::Python)
}

/// Fixture documents replicated under distinct paths until their total size
/// reaches `min_bytes`.
pub fn replicated_corpus(min_bytes: usize) -> Vec<SourceDocument> {
    let base = corpus_documents();
    let mut out = Vec::new();
    let mut total = 0;
    let mut copy = 0;
    while total < min_bytes {
        for d in &base {
            total += d.len();
            out.push(SourceDocument::new(
                format!("copy{copy:03}/{}", d.path()),
                d.bytes().to_vec(),
                d.language(),
            ));
        }
        copy += 1;
    }
    out
}

/// Checks reconstruction, tiling, indices, sizes, node nesting and the budget.
pub fn check_chunks(
    doc: &SourceDocument,
    chunks: &[Chunk],
    config: Option<&ChunkingConfig>,
) -> Result<(), String> {
    let ctx = |msg: String| format!("{}: {msg}", doc.path());
    if doc.is_empty() {
        return if chunks.is_empty() {
            Ok(())
        } else {
            Err(ctx("chunks for empty file".into()))
        };
    }
    let mut rebuilt = Vec::with_capacity(doc.len());
    let mut cursor = 0;
    for (i, c) in chunks.iter().enumerate() {
        if c.index != i {
            return Err(ctx(format!("chunk {i} has index {}", c.index)));
        }
        if c.span.start != cursor || c.span.end <= c.span.start {
            return Err(ctx(format!(
                "chunk {i} span {:?} does not continue at {cursor}",
                c.span
            )));
        }
        cursor = c.span.end;
        rebuilt.extend_from_slice(c.text(doc));
        if c.size != count_non_ws(c.text(doc)) {
            return Err(ctx(format!("chunk {i} size {} is wrong", c.size)));
        }
        let mut prev_end = c.span.start;
        for n in &c.node_spans {
            if n.start < prev_end || n.end > c.span.end || n.start > n.end {
                return Err(ctx(format!(
                    "chunk {i} node span {n:?} out of order or outside {:?}",
                    c.span
                )));
            }
            prev_end = n.end;
        }
        if c.line_span.0 > c.line_span.1 || c.line_span.1 > doc.line_count() {
            return Err(ctx(format!("chunk {i} line span {:?}", c.line_span)));
        }
        if let Some(config) = config {
            if c.size > config.max_chunk_size && config.oversize_policy == OversizePolicy::LineSplit
            {
                return Err(ctx(format!("chunk {i} size {} over budget", c.size)));
            }
        }
    }
    if cursor != doc.len() {
        return Err(ctx(format!(
            "chunks end at {cursor}, file has {} bytes",
            doc.len()
        )));
    }
    if rebuilt != doc.bytes() {
        return Err(ctx("concatenated chunks differ from the file".into()));
    }
    Ok(())
}

/// True when a childless node spans exactly `span`.
pub fn has_childless_node_with_span(node: SyntaxNode<'_>, span: &Range<usize>) -> bool {
    if node.start() > span.start || node.end() < span.end {
        return false;
    }
    if node.span() == *span && !node.has_children() {
        return true;
    }
    node.children()
        .any(|c| has_childless_node_with_span(c, span))
}
