//! Repository walking, corpus chunking, JSONL records and statistics.

mod pipeline;
mod record;
mod stats;
mod walk;

pub use pipeline::{chunk_corpus, chunk_file_records, ChunkStrategy, StrategyKind};
pub use record::{
    read_records, read_records_from, write_records, BreadcrumbRecord, ChunkRecord, SCHEMA_VERSION,
};
pub use stats::{compute_stats, LanguageStats, LineStats, SizeStats, StatsReport};
pub use walk::{walk_repository, WalkOptions, WalkResult};
