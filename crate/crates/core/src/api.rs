//! Entry points for foreign-language wrappers.
//!
//! Each call parses with the calling thread's own parser and returns owned
//! records, so calls from several threads never share state.

use std::path::Path;

use crate::chunk::ChunkingConfig;
use crate::corpus::{chunk_file_records, ChunkRecord, ChunkStrategy};
use crate::document::SourceDocument;
use crate::error::{Error, Result};
use crate::language::{detect_language, LanguageId};

/// Path recorded for in-memory snippets.
pub const MEMORY_PATH: &str = "<memory>";

/// Overrides applied on top of [`ChunkingConfig::default`].
#[derive(Debug, Clone, Default)]
pub struct ChunkOverrides {
    pub max_chunk_size: Option<usize>,
    pub merge_enabled: Option<bool>,
}

impl ChunkOverrides {
    fn config(&self) -> ChunkingConfig {
        let mut config = ChunkingConfig::default();
        if let Some(size) = self.max_chunk_size {
            config.max_chunk_size = size;
        }
        if let Some(merge) = self.merge_enabled {
            config.merge_enabled = merge;
        }
        config
    }
}

/// Chunks an in-memory snippet recorded under the path `<memory>`.
pub fn chunk_code(
    text: &str,
    language: &str,
    max_chunk_size: usize,
    merge_enabled: bool,
) -> Result<Vec<ChunkRecord>> {
    let language: LanguageId = language.parse()?;
    let doc = SourceDocument::new(MEMORY_PATH, text.as_bytes(), language);
    let config = ChunkingConfig::default()
        .with_max_chunk_size(max_chunk_size)
        .with_merge(merge_enabled);
    chunk_file_records(&doc, &ChunkStrategy::Cast(config))
}

/// Chunks a file on disk, detecting its language from the extension.
pub fn chunk_file(path: &Path, overrides: &ChunkOverrides) -> Result<Vec<ChunkRecord>> {
    let language = detect_language(path)
        .ok_or_else(|| Error::UnregisteredLanguage(path.display().to_string()))?;
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let doc = SourceDocument::new(path.to_string_lossy().replace('\\', "/"), bytes, language);
    chunk_file_records(&doc, &ChunkStrategy::Cast(overrides.config()))
}
