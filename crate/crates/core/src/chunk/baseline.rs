use crate::chunk::{Breadcrumb, Chunk};
use crate::document::{count_non_ws, SourceDocument};

/// Tiles the document into runs of `lines_per_chunk` lines; the last run may
/// be shorter. A `lines_per_chunk` of 0 is treated as 1.
pub fn fixed_size_line_chunker(doc: &SourceDocument, lines_per_chunk: usize) -> Vec<Chunk> {
    let per = lines_per_chunk.max(1);
    let offsets = doc.line_offsets();
    let line_count = doc.line_count();
    (0..line_count)
        .step_by(per)
        .enumerate()
        .map(|(index, first)| {
            let last = (first + per).min(line_count);
            let start = offsets[first];
            let end = offsets.get(last).copied().unwrap_or(doc.len());
            Chunk {
                doc_path: doc.path().to_string(),
                span: start..end,
                node_spans: Vec::new(),
                size: count_non_ws(&doc.bytes()[start..end]),
                line_span: (first + 1, last),
                breadcrumb: Breadcrumb::for_file(doc.path()),
                index,
            }
        })
        .collect()
}
