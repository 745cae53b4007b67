//! Recursive split-then-merge over sibling runs.
//!
//! Siblings are packed greedily left to right while the running size stays
//! within budget. A node that alone exceeds the budget flushes the running
//! group and is replaced by the groups of its children; packing then resumes
//! with an empty group, so sub-groups never merge with later siblings.
//!
//! Every node is sized by its *extent*: its own span plus the gap bytes that
//! precede it (back to the previous sibling, or to the start of the parent's
//! extent for a first child), and for a last child also the bytes up to the
//! end of the parent's extent. Extents of siblings tile their parent's extent,
//! so the size of a group is exactly the size of the chunk it becomes once
//! gaps are attached. Between siblings the gap is whitespace and extent size
//! equals span size.

use std::ops::Range;

use crate::chunk::config::{ChunkingConfig, OversizePolicy};
use crate::document::{count_non_ws, is_ws_byte, SourceDocument};
use crate::syntax::SyntaxNode;

/// One member of a [`NodeGroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    /// Id of the node this piece came from.
    pub node: usize,
    /// The node's span, or for a fragment of a split node, the part of the
    /// node's span inside the fragment.
    pub span: Range<usize>,
    /// Bytes this piece owns once gaps are attached.
    pub extent: Range<usize>,
    /// Non-whitespace bytes in `extent`.
    pub size: usize,
    /// True when the piece is a line-split fragment, not a whole node.
    pub fragment: bool,
}

/// Nodes (or fragments) that will become one chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeGroup {
    pub pieces: Vec<Piece>,
    pub size: usize,
    /// Identifies the sibling run the group was packed from. Adjacent groups
    /// with equal `run` were separated by a budget overflow only.
    pub run: usize,
}

impl NodeGroup {
    pub fn extent(&self) -> Range<usize> {
        let first = self.pieces.first().map_or(0, |p| p.extent.start);
        let last = self.pieces.last().map_or(0, |p| p.extent.end);
        first..last
    }

    pub fn node_spans(&self) -> Vec<Range<usize>> {
        self.pieces.iter().map(|p| p.span.clone()).collect()
    }
}

enum Siblings<'t, 'n> {
    Children(SyntaxNode<'t>),
    List(&'n [SyntaxNode<'t>]),
}

impl<'t> Siblings<'t, '_> {
    fn get(&self, index: usize) -> Option<SyntaxNode<'t>> {
        match self {
            Siblings::Children(parent) => parent.child(index),
            Siblings::List(nodes) => nodes.get(index).copied(),
        }
    }

    fn len(&self) -> usize {
        match self {
            Siblings::Children(parent) => parent.child_count(),
            Siblings::List(nodes) => nodes.len(),
        }
    }
}

struct Frame<'t, 'n> {
    siblings: Siblings<'t, 'n>,
    next: usize,
    /// Start of the next sibling's extent.
    cursor: usize,
    /// End of the run's extent; absorbed by the last sibling.
    tail: usize,
    run: usize,
}

struct Packer<'a> {
    bytes: &'a [u8],
    config: &'a ChunkingConfig,
    groups: Vec<NodeGroup>,
    current: Vec<Piece>,
    current_size: usize,
    runs: usize,
}

impl<'a> Packer<'a> {
    fn new(bytes: &'a [u8], config: &'a ChunkingConfig) -> Self {
        Packer {
            bytes,
            config,
            groups: Vec::new(),
            current: Vec::new(),
            current_size: 0,
            runs: 0,
        }
    }

    fn flush(&mut self, run: usize) {
        if !self.current.is_empty() {
            let pieces = std::mem::take(&mut self.current);
            self.groups.push(NodeGroup {
                pieces,
                size: self.current_size,
                run,
            });
            self.current_size = 0;
        }
    }

    fn new_run(&mut self) -> usize {
        self.runs += 1;
        self.runs
    }

    /// Packs a sibling run whose extent is `extent`.
    fn run(&mut self, siblings: Siblings<'_, '_>, extent: Range<usize>) {
        let budget = self.config.max_chunk_size;
        let run = self.new_run();
        let mut stack = vec![Frame {
            siblings,
            next: 0,
            cursor: extent.start,
            tail: extent.end,
            run,
        }];

        while let Some(frame) = stack.last_mut() {
            let run = frame.run;
            let Some(node) = frame.siblings.get(frame.next) else {
                self.flush(run);
                stack.pop();
                continue;
            };
            frame.next += 1;
            let is_last = frame.next == frame.siblings.len();
            // Extents tile the run even if a grammar reports overlapping spans.
            let start = frame.cursor;
            let end = if is_last {
                frame.tail
            } else {
                node.end().clamp(start, frame.tail)
            };
            frame.cursor = end;
            let size = count_non_ws(&self.bytes[start..end]);
            let piece = Piece {
                node: node.id(),
                span: node.span(),
                extent: start..end,
                size,
                fragment: false,
            };

            if size <= budget {
                if !self.config.merge_enabled || self.current_size + size > budget {
                    self.flush(run);
                }
                self.current_size += size;
                self.current.push(piece);
                continue;
            }

            // Oversized: close the running group, then split.
            self.flush(run);
            if node.has_children() {
                let child_run = self.new_run();
                stack.push(Frame {
                    siblings: Siblings::Children(node),
                    next: 0,
                    cursor: start,
                    tail: end,
                    run: child_run,
                });
            } else {
                self.oversized_leaf(node, piece);
            }
        }
    }

    fn oversized_leaf(&mut self, node: SyntaxNode<'_>, piece: Piece) {
        let run = self.new_run();
        match self.config.oversize_policy {
            OversizePolicy::EmitOversized => self.groups.push(NodeGroup {
                size: piece.size,
                pieces: vec![piece],
                run,
            }),
            OversizePolicy::LineSplit => {
                let base = piece.extent.start;
                let text = &self.bytes[piece.extent.clone()];
                for range in split_oversized_leaf(text, self.config.max_chunk_size) {
                    let extent = base + range.start..base + range.end;
                    // Part of the node inside this fragment; empty (at the
                    // fragment's edge) for a fragment made only of gap bytes.
                    let span_start = node.start().clamp(extent.start, extent.end);
                    let span = span_start..node.end().clamp(span_start, extent.end);
                    let size = count_non_ws(&self.bytes[extent.clone()]);
                    self.groups.push(NodeGroup {
                        pieces: vec![Piece {
                            node: node.id(),
                            span,
                            extent,
                            size,
                            fragment: true,
                        }],
                        size,
                        run,
                    });
                }
            }
        }
    }
}

/// Groups a run of sibling nodes, in document order, under `config`'s budget.
///
/// The run's extent is the hull of the nodes' spans; the gap before each node
/// attaches to it.
pub fn chunk_nodes(
    doc: &SourceDocument,
    nodes: &[SyntaxNode<'_>],
    config: &ChunkingConfig,
) -> Vec<NodeGroup> {
    let (Some(first), Some(last)) = (nodes.first(), nodes.last()) else {
        return Vec::new();
    };
    let mut packer = Packer::new(doc.bytes(), config);
    packer.run(Siblings::List(nodes), first.start()..last.end());
    absorb_empty_groups(packer.groups)
}

/// Groups the children of `root`, whose extent is the whole document.
pub(crate) fn chunk_children(
    doc: &SourceDocument,
    root: SyntaxNode<'_>,
    config: &ChunkingConfig,
) -> Vec<NodeGroup> {
    let mut packer = Packer::new(doc.bytes(), config);
    if root.has_children() {
        packer.run(Siblings::Children(root), 0..doc.len());
    } else {
        // No structure below the root: it is the only node.
        packer.run(Siblings::List(&[root]), 0..doc.len());
    }
    absorb_empty_groups(packer.groups)
}

/// Folds groups that own no bytes (zero-width nodes such as parser-inserted
/// missing tokens) into the preceding group, or the following one at the
/// start, so that no chunk is empty.
fn absorb_empty_groups(groups: Vec<NodeGroup>) -> Vec<NodeGroup> {
    let mut out: Vec<NodeGroup> = Vec::with_capacity(groups.len());
    let mut pending: Vec<Piece> = Vec::new();
    for mut group in groups {
        if group.extent().is_empty() {
            match out.last_mut() {
                Some(prev) => prev.pieces.append(&mut group.pieces),
                None => pending.append(&mut group.pieces),
            }
            continue;
        }
        if !pending.is_empty() {
            pending.append(&mut group.pieces);
            group.pieces = std::mem::take(&mut pending);
        }
        out.push(group);
    }
    if let Some(last) = out.last_mut() {
        last.pieces.append(&mut pending);
    } else if !pending.is_empty() {
        out.push(NodeGroup {
            pieces: pending,
            size: 0,
            run: 0,
        });
    }
    out
}

/// Splits text that has no syntactic children into pieces of at most
/// `budget` non-whitespace bytes.
///
/// Whole lines are packed greedily. A line that alone exceeds the budget is
/// cut after its `budget`-th non-whitespace byte (keeping the whitespace that
/// follows), moved back if needed so the cut does not land inside a UTF-8
/// sequence. The returned ranges tile `0..text.len()`.
pub fn split_oversized_leaf(text: &[u8], budget: usize) -> Vec<Range<usize>> {
    let budget = budget.max(1);
    // Atoms: whole lines, or budget-sized cuts of overlong lines.
    let mut atoms: Vec<(Range<usize>, usize)> = Vec::new();
    let mut line_start = 0;
    while line_start < text.len() {
        let line_end = text[line_start..]
            .iter()
            .position(|&b| b == b'\n')
            .map_or(text.len(), |i| line_start + i + 1);
        let size = count_non_ws(&text[line_start..line_end]);
        if size <= budget {
            atoms.push((line_start..line_end, size));
        } else {
            let mut start = line_start;
            while start < line_end {
                let cut = cut_after_budget(text, start, line_end, budget);
                atoms.push((start..cut, count_non_ws(&text[start..cut])));
                start = cut;
            }
        }
        line_start = line_end;
    }

    let mut out: Vec<Range<usize>> = Vec::new();
    let mut current: Option<(Range<usize>, usize)> = None;
    for (range, size) in atoms {
        current = match current {
            Some((cur, cur_size)) if cur_size + size <= budget => {
                Some((cur.start..range.end, cur_size + size))
            }
            Some((cur, _)) => {
                out.push(cur);
                Some((range, size))
            }
            None => Some((range, size)),
        };
    }
    if let Some((cur, _)) = current {
        out.push(cur);
    }
    out
}

/// End of the longest prefix of `text[start..end]` holding at most `budget`
/// non-whitespace bytes, snapped back to a UTF-8 boundary when possible.
fn cut_after_budget(text: &[u8], start: usize, end: usize, budget: usize) -> usize {
    let mut seen = 0;
    let mut cut = end;
    for (i, &b) in text[start..end].iter().enumerate() {
        if !is_ws_byte(b) {
            if seen == budget {
                cut = start + i;
                break;
            }
            seen += 1;
        }
    }
    if cut == end {
        return end;
    }
    let mut snapped = cut;
    while snapped > start && cut - snapped < 3 && is_continuation(text[snapped]) {
        snapped -= 1;
    }
    if snapped > start && !is_continuation(text[snapped]) {
        snapped
    } else {
        cut
    }
}

fn is_continuation(b: u8) -> bool {
    b & 0xC0 == 0x80
}
