//! Reference transcription of the split-then-merge pseudocode.
//!
//! Written to be read side by side with the published algorithm, not to be
//! fast. Differences from the literal pseudocode:
//! - after an overflow flush, a node that fits starts the new chunk;
//! - with merging off, every fitting node is its own chunk;
//! - a childless node over budget becomes its own chunk.
//!
//! Nodes are sized by their own span.

use std::ops::Range;

use astchunk::document::count_non_ws;
use astchunk::{chunk_tree, parse, ChunkingConfig, SourceDocument, SyntaxNode, SyntaxTree};

pub struct Oracle<'d> {
    pub doc: &'d SourceDocument,
    pub max_size: usize,
    pub merge: bool,
}

impl Oracle<'_> {
    fn get_size(&self, node: SyntaxNode<'_>) -> usize {
        count_non_ws(&self.doc.bytes()[node.span()])
    }

    /// Node groups as lists of node spans.
    pub fn chunk_code(&self, tree: &SyntaxTree) -> Vec<Vec<Range<usize>>> {
        if self.doc.is_empty() {
            return vec![];
        }
        let root = tree.root();
        if count_non_ws(self.doc.bytes()) <= self.max_size {
            return vec![vec![root.span()]];
        }
        if !root.has_children() {
            return vec![vec![root.span()]];
        }
        let children: Vec<_> = root.children().collect();
        self.chunk_nodes(&children)
    }

    fn chunk_nodes(&self, nodes: &[SyntaxNode<'_>]) -> Vec<Vec<Range<usize>>> {
        let mut chunks = vec![];
        let mut chunk: Vec<Range<usize>> = vec![];
        let mut size = 0;
        for &node in nodes {
            let s = self.get_size(node);
            if (chunk.is_empty() && s > self.max_size) || size + s > self.max_size || !self.merge {
                if !chunk.is_empty() {
                    chunks.push(chunk);
                    chunk = vec![];
                    size = 0;
                }
                if s > self.max_size {
                    if node.has_children() {
                        let children: Vec<_> = node.children().collect();
                        let subchunks = self.chunk_nodes(&children);
                        chunks.extend(subchunks);
                    } else {
                        chunks.push(vec![node.span()]);
                    }
                    continue;
                }
                chunk.push(node.span());
                size = s;
            } else {
                chunk.push(node.span());
                size += s;
            }
        }
        if !chunk.is_empty() {
            chunks.push(chunk);
        }
        chunks
    }

    /// Chunk spans after attaching each gap to the following chunk and the
    /// trailing bytes to the last one.
    pub fn chunk_spans(&self, tree: &SyntaxTree) -> Vec<Range<usize>> {
        let groups = self.chunk_code(tree);
        let mut spans = vec![];
        let mut start = 0;
        for (i, group) in groups.iter().enumerate() {
            let end = if i + 1 == groups.len() {
                self.doc.len()
            } else {
                group.last().unwrap().end
            };
            spans.push(start..end);
            start = end;
        }
        spans
    }
}

/// Runs the engine and the oracle on `doc` and returns the chunk count when
/// both agree on spans and node groups.
pub fn compare(doc: &SourceDocument, config: &ChunkingConfig) -> Result<usize, String> {
    let tree = parse(doc).map_err(|e| e.to_string())?;
    let oracle = Oracle {
        doc,
        max_size: config.max_chunk_size,
        merge: config.merge_enabled,
    };
    let expected_spans = oracle.chunk_spans(&tree);
    let expected_nodes = oracle.chunk_code(&tree);
    let chunks = chunk_tree(doc, &tree, config);
    let spans: Vec<Range<usize>> = chunks.iter().map(|c| c.span.clone()).collect();
    let nodes: Vec<Vec<Range<usize>>> = chunks.iter().map(|c| c.node_spans.clone()).collect();
    if spans != expected_spans {
        return Err(format!(
            "{}: spans {spans:?} != oracle {expected_spans:?}",
            doc.path()
        ));
    }
    if nodes != expected_nodes {
        return Err(format!(
            "{}: node groups differ from the oracle",
            doc.path()
        ));
    }
    Ok(chunks.len())
}
