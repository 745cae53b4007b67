use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::chunk::{chunk_document, fixed_size_line_chunker, ChunkingConfig};
use crate::document::SourceDocument;
use crate::error::{Error, Result};

use super::record::ChunkRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StrategyKind {
    #[serde(rename = "cast")]
    Cast,
    #[serde(rename = "fixed-line")]
    FixedLine,
}

impl StrategyKind {
    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Cast => "cast",
            StrategyKind::FixedLine => "fixed-line",
        }
    }
}

/// How to chunk each file of a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChunkStrategy {
    /// Syntax-aligned split-then-merge.
    Cast(ChunkingConfig),
    /// Fixed runs of lines.
    FixedLine { lines_per_chunk: usize },
}

impl ChunkStrategy {
    pub fn kind(&self) -> StrategyKind {
        match self {
            ChunkStrategy::Cast(_) => StrategyKind::Cast,
            ChunkStrategy::FixedLine { .. } => StrategyKind::FixedLine,
        }
    }

    pub fn digest(&self) -> String {
        match self {
            ChunkStrategy::Cast(config) => config.digest(),
            ChunkStrategy::FixedLine { lines_per_chunk } => {
                let canonical = format!("{{\"lines_per_chunk\":{lines_per_chunk}}}");
                let hash = Sha256::digest(canonical.as_bytes());
                hash[..8].iter().map(|b| format!("{b:02x}")).collect()
            }
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ChunkStrategy::Cast(config) => config.validate(),
            ChunkStrategy::FixedLine { lines_per_chunk: 0 } => Err(Error::InvalidConfig(
                "lines_per_chunk must be at least 1".into(),
            )),
            ChunkStrategy::FixedLine { .. } => Ok(()),
        }
    }
}

/// Chunks one document into records.
pub fn chunk_file_records(
    doc: &SourceDocument,
    strategy: &ChunkStrategy,
) -> Result<Vec<ChunkRecord>> {
    chunk_with_digest(doc, strategy, &strategy.digest())
}

fn chunk_with_digest(
    doc: &SourceDocument,
    strategy: &ChunkStrategy,
    digest: &str,
) -> Result<Vec<ChunkRecord>> {
    let chunks = match strategy {
        ChunkStrategy::Cast(config) => chunk_document(doc, config)?,
        ChunkStrategy::FixedLine { lines_per_chunk } => {
            fixed_size_line_chunker(doc, *lines_per_chunk)
        }
    };
    let kind = strategy.kind();
    Ok(chunks
        .iter()
        .map(|c| ChunkRecord::from_chunk(doc, c, kind, digest))
        .collect())
}

/// Chunks every document on `jobs` workers (0 means one per logical core).
///
/// Records come out in input order, then by index, whatever the worker count. A file
/// that fails is skipped and reported through `log`.
pub fn chunk_corpus(
    docs: &[SourceDocument],
    strategy: &ChunkStrategy,
    jobs: usize,
) -> Result<Vec<ChunkRecord>> {
    strategy.validate()?;
    let digest = strategy.digest();
    let run = || -> Vec<Vec<ChunkRecord>> {
        docs.par_iter()
            .map(|doc| match chunk_with_digest(doc, strategy, &digest) {
                Ok(records) => records,
                Err(err) => {
                    log::warn!("skipping {}: {err}", doc.path());
                    Vec::new()
                }
            })
            .collect()
    };
    let per_file = if jobs == 1 {
        // No pool needed; keeps single-worker runs on the calling thread.
        docs.iter()
            .map(|doc| {
                chunk_with_digest(doc, strategy, &digest).unwrap_or_else(|err| {
                    log::warn!("skipping {}: {err}", doc.path());
                    Vec::new()
                })
            })
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("cannot start workers: {e}")))?;
        pool.install(run)
    };
    Ok(per_file.into_iter().flatten().collect())
}
