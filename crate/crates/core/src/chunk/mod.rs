//! Syntax-aligned chunking and the fixed-line baseline.

mod baseline;
mod breadcrumb;
mod config;
mod engine;
mod gaps;

use std::ops::Range;

use serde::{Deserialize, Serialize};

pub use baseline::fixed_size_line_chunker;
pub use breadcrumb::{extract_breadcrumb, Breadcrumb};
pub use config::{ChunkingConfig, LanguageKinds, OversizePolicy, DEFAULT_MAX_CHUNK_SIZE};
pub use engine::{chunk_nodes, split_oversized_leaf, NodeGroup, Piece};
pub use gaps::attach_gaps;

use crate::document::{count_non_ws, SourceDocument};
use crate::error::Result;
use crate::syntax::{self, SyntaxTree};

/// A contiguous byte span of one document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chunk {
    pub doc_path: String,
    pub span: Range<usize>,
    /// Spans of the member nodes, in order. Empty for baseline chunks.
    pub node_spans: Vec<Range<usize>>,
    /// Non-whitespace bytes in `span`.
    pub size: usize,
    /// First and last 1-based lines.
    pub line_span: (usize, usize),
    pub breadcrumb: Breadcrumb,
    /// Position within the document's chunk sequence.
    pub index: usize,
}

impl Chunk {
    pub fn text<'d>(&self, doc: &'d SourceDocument) -> &'d [u8] {
        &doc.bytes()[self.span.clone()]
    }
}

/// Parses `doc` and splits it into syntax-aligned chunks.
///
/// A document whose whole size fits the budget is a single chunk; an empty
/// document has none.
pub fn chunk_document(doc: &SourceDocument, config: &ChunkingConfig) -> Result<Vec<Chunk>> {
    config.validate()?;
    if doc.is_empty() {
        return Ok(Vec::new());
    }
    let tree = syntax::parse(doc)?;
    Ok(chunk_tree(doc, &tree, config))
}

/// Chunks a document whose tree is already built.
pub fn chunk_tree(doc: &SourceDocument, tree: &SyntaxTree, config: &ChunkingConfig) -> Vec<Chunk> {
    if doc.is_empty() {
        return Vec::new();
    }
    let root = tree.root();
    let mut chunks = if count_non_ws(doc.bytes()) <= config.max_chunk_size {
        let group = NodeGroup {
            pieces: vec![Piece {
                node: root.id(),
                span: root.span(),
                extent: 0..doc.len(),
                size: count_non_ws(doc.bytes()),
                fragment: false,
            }],
            size: count_non_ws(doc.bytes()),
            run: 0,
        };
        attach_gaps(&[group], doc)
    } else {
        attach_gaps(&engine::chunk_children(doc, root, config), doc)
    };
    for chunk in &mut chunks {
        chunk.breadcrumb = extract_breadcrumb(chunk, root, doc, config);
    }
    chunks
}
