use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::chunk::config::ChunkingConfig;
use crate::chunk::Chunk;
use crate::document::SourceDocument;
use crate::syntax::SyntaxNode;

/// File, class and function enclosure of a chunk.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Breadcrumb {
    pub file_path: String,
    pub class_path: Vec<String>,
    pub function_path: Vec<String>,
}

impl Breadcrumb {
    pub fn for_file(path: &str) -> Self {
        Breadcrumb {
            file_path: path.to_string(),
            ..Default::default()
        }
    }
}

/// Computes the breadcrumb of `chunk` from the enclosing scopes of its first
/// node (the node included). Scopes without a resolvable name are recorded
/// as empty strings.
pub fn extract_breadcrumb(
    chunk: &Chunk,
    root: SyntaxNode<'_>,
    doc: &SourceDocument,
    config: &ChunkingConfig,
) -> Breadcrumb {
    let mut crumb = Breadcrumb::for_file(&chunk.doc_path);
    let Some(target) = chunk.node_spans.first() else {
        return crumb;
    };
    let kinds = config.kinds(doc.language());
    for node in enclosing_path(root, target) {
        if matches_kind(node, &kinds.class_like) {
            crumb.class_path.push(scope_name(node, doc));
        }
        if matches_kind(node, &kinds.function_like) {
            crumb.function_path.push(scope_name(node, doc));
        }
    }
    crumb
}

/// Nodes from just below the root down to the outermost node whose span is
/// `target`, or to the deepest node containing it.
fn enclosing_path<'t>(root: SyntaxNode<'t>, target: &Range<usize>) -> Vec<SyntaxNode<'t>> {
    let mut path = Vec::new();
    let mut node = root;
    while node.span() != *target {
        let next = node.children().find(|c| c.span() == *target).or_else(|| {
            node.children()
                .find(|c| c.start() <= target.start && target.end <= c.end() && c.start() < c.end())
        });
        match next {
            Some(child) => {
                path.push(child);
                node = child;
            }
            None => break,
        }
    }
    path
}

fn matches_kind(node: SyntaxNode<'_>, entries: &[String]) -> bool {
    entries.iter().any(|entry| match entry.split_once('>') {
        Some((parent, kind)) => {
            node.kind() == kind && node.parent().is_some_and(|p| p.kind() == parent)
        }
        None => node.kind() == entry,
    })
}

fn scope_name(node: SyntaxNode<'_>, doc: &SourceDocument) -> String {
    let name = node
        .child_by_field("name")
        .or_else(|| node.parent().and_then(|p| p.child_by_field("name")));
    name.map(|n| String::from_utf8_lossy(&doc.bytes()[n.span()]).into_owned())
        .unwrap_or_default()
}
