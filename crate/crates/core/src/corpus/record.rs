use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chunk::Chunk;
use crate::document::SourceDocument;
use crate::error::{Error, Result};
use crate::language::LanguageId;

use super::pipeline::StrategyKind;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreadcrumbRecord {
    pub file: String,
    pub classes: Vec<String>,
    pub functions: Vec<String>,
}

/// One chunk as written to JSON lines. Field order is the wire key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkRecord {
    pub v: u32,
    /// `<path>:<index>`
    pub id: String,
    pub path: String,
    pub language: LanguageId,
    pub start_byte: usize,
    pub end_byte: usize,
    pub start_line: usize,
    pub end_line: usize,
    pub size_non_ws: usize,
    /// Chunk bytes decoded as UTF-8, invalid sequences replaced.
    pub text: String,
    pub breadcrumb: BreadcrumbRecord,
    pub strategy: StrategyKind,
    pub config_digest: String,
}

impl ChunkRecord {
    pub fn from_chunk(
        doc: &SourceDocument,
        chunk: &Chunk,
        strategy: StrategyKind,
        config_digest: &str,
    ) -> Self {
        ChunkRecord {
            v: SCHEMA_VERSION,
            id: format!("{}:{}", doc.path(), chunk.index),
            path: doc.path().to_string(),
            language: doc.language(),
            start_byte: chunk.span.start,
            end_byte: chunk.span.end,
            start_line: chunk.line_span.0,
            end_line: chunk.line_span.1,
            size_non_ws: chunk.size,
            text: String::from_utf8_lossy(chunk.text(doc)).into_owned(),
            breadcrumb: BreadcrumbRecord {
                file: chunk.breadcrumb.file_path.clone(),
                classes: chunk.breadcrumb.class_path.clone(),
                functions: chunk.breadcrumb.function_path.clone(),
            },
            strategy,
            config_digest: config_digest.to_string(),
        }
    }

    pub fn byte_len(&self) -> usize {
        self.end_byte - self.start_byte
    }

    pub fn line_count(&self) -> usize {
        self.end_line + 1 - self.start_line.min(self.end_line)
    }
}

/// Writes one JSON object per line.
pub fn write_records<'r, W: Write>(
    writer: W,
    records: impl IntoIterator<Item = &'r ChunkRecord>,
) -> Result<()> {
    let mut writer = BufWriter::new(writer);
    for record in records {
        serde_json::to_writer(&mut writer, record)?;
        writer
            .write_all(b"\n")
            .map_err(|e| Error::io("<output>", e))?;
    }
    writer.flush().map_err(|e| Error::io("<output>", e))
}

/// Reads records written by [`write_records`]. Blank lines are ignored.
pub fn read_records_from<R: Read>(reader: R) -> Result<Vec<ChunkRecord>> {
    let mut records = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::MalformedRecord {
            line: line_no,
            message: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let record: ChunkRecord =
            serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
                line: line_no,
                message: e.to_string(),
            })?;
        if record.v != SCHEMA_VERSION {
            return Err(Error::MalformedRecord {
                line: line_no,
                message: format!("unsupported schema version {}", record.v),
            });
        }
        if record.end_byte < record.start_byte {
            return Err(Error::MalformedRecord {
                line: line_no,
                message: "end_byte precedes start_byte".into(),
            });
        }
        records.push(record);
    }
    Ok(records)
}

pub fn read_records(path: &Path) -> Result<Vec<ChunkRecord>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_records_from(file)
}
