use crate::chunk::engine::NodeGroup;
use crate::chunk::{Breadcrumb, Chunk};
use crate::document::SourceDocument;

/// Turns node groups into chunks that tile the document.
///
/// Chunk `i` runs from the end of chunk `i - 1` (0 for the first) to the end
/// of its group's last member, so the gap before a group belongs to it. The
/// last chunk also takes everything up to the end of the file.
///
/// A member ends where its extent ends. Between siblings that is the node's
/// end byte; the extent only differs where it absorbs a parent's trailing
/// bytes or where a line-split fragment stops inside the node.
pub fn attach_gaps(groups: &[NodeGroup], doc: &SourceDocument) -> Vec<Chunk> {
    let groups: Vec<&NodeGroup> = groups.iter().filter(|g| !g.pieces.is_empty()).collect();
    let mut chunks = Vec::with_capacity(groups.len());
    let mut start = 0;
    for (index, group) in groups.iter().enumerate() {
        let last_end = group
            .pieces
            .iter()
            .map(|p| p.extent.end)
            .max()
            .unwrap_or(start);
        let end = if index + 1 == groups.len() {
            doc.len()
        } else {
            last_end.clamp(start, doc.len())
        };
        let span = start..end;
        chunks.push(Chunk {
            doc_path: doc.path().to_string(),
            node_spans: group.node_spans(),
            size: crate::document::count_non_ws(&doc.bytes()[span.clone()]),
            line_span: doc.line_span(span.clone()),
            breadcrumb: Breadcrumb::for_file(doc.path()),
            index,
            span,
        });
        start = end;
    }
    chunks
}
