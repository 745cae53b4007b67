//! Source documents and the non-whitespace size metric.

use std::ops::Range;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::language::LanguageId;

/// Whitespace bytes excluded from chunk sizes: space, tab, LF, CR, FF, VT.
#[inline]
pub fn is_ws_byte(b: u8) -> bool {
    matches!(b, b' ' | b'\t' | b'\n' | b'\r' | 0x0c | 0x0b)
}

/// Number of non-whitespace bytes in `bytes`.
#[inline]
pub fn count_non_ws(bytes: &[u8]) -> usize {
    bytes.iter().filter(|&&b| !is_ws_byte(b)).count()
}

/// One source file: immutable bytes plus a line index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDocument {
    path: String,
    bytes: Arc<[u8]>,
    language: LanguageId,
    line_offsets: Vec<usize>,
}

impl SourceDocument {
    pub fn new(path: impl Into<String>, bytes: impl Into<Arc<[u8]>>, language: LanguageId) -> Self {
        let bytes = bytes.into();
        let mut line_offsets = vec![0];
        line_offsets.extend(
            bytes
                .iter()
                .enumerate()
                .filter(|(_, &b)| b == b'\n')
                .map(|(i, _)| i + 1)
                .filter(|&start| start < bytes.len()),
        );
        SourceDocument {
            path: path.into(),
            bytes,
            language,
            line_offsets,
        }
    }

    /// Repository-relative path, `/`-separated.
    pub fn path(&self) -> &str {
        &self.path
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn language(&self) -> LanguageId {
        self.language
    }

    /// Byte offset of each line start. The first entry is always 0.
    pub fn line_offsets(&self) -> &[usize] {
        &self.line_offsets
    }

    /// Number of lines; 0 for an empty document.
    pub fn line_count(&self) -> usize {
        if self.bytes.is_empty() {
            0
        } else {
            self.line_offsets.len()
        }
    }

    pub fn slice(&self, span: Range<usize>) -> Result<&[u8]> {
        self.check_span(&span)?;
        Ok(&self.bytes[span])
    }

    pub fn non_ws_size(&self, span: Range<usize>) -> Result<usize> {
        Ok(count_non_ws(self.slice(span)?))
    }

    /// 1-based line containing byte `offset`. Offsets at or past the end map
    /// to the last line.
    pub fn line_of(&self, offset: usize) -> usize {
        self.line_offsets
            .partition_point(|&start| start <= offset)
            .max(1)
    }

    /// First and last 1-based lines of `span`'s content.
    ///
    /// A span that starts inside a line whose remainder (within the span) is
    /// only whitespace starts on the following line, so the gap a chunk
    /// inherits from its predecessor's last line is not counted as its own.
    pub fn line_span(&self, span: Range<usize>) -> (usize, usize) {
        if span.start >= span.end {
            let line = self.line_of(span.start);
            return (line, line);
        }
        let end_line = self.line_of(span.end - 1);
        let mut start_line = self.line_of(span.start);
        let line_start = self.line_offsets[start_line - 1];
        if line_start != span.start {
            let next_line_start = self
                .line_offsets
                .get(start_line)
                .copied()
                .unwrap_or(self.bytes.len());
            let rest_end = next_line_start.min(span.end);
            if count_non_ws(&self.bytes[span.start..rest_end]) == 0 && rest_end < span.end {
                start_line += 1;
            }
        }
        (start_line.min(end_line), end_line)
    }

    fn check_span(&self, span: &Range<usize>) -> Result<()> {
        if span.start > span.end || span.end > self.bytes.len() {
            return Err(Error::SpanOutOfBounds {
                span: span.clone(),
                len: self.bytes.len(),
            });
        }
        Ok(())
    }
}
