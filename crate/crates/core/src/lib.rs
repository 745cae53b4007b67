//! Syntax-aware chunking of source code for retrieval pipelines.
//!
//! Files are parsed with tree-sitter and split into chunks that follow the
//! syntax tree: large nodes are split recursively, small adjacent siblings are
//! packed together, and every chunk stays within a budget of non-whitespace
//! bytes. Concatenating a file's chunks reproduces the file byte for byte.
//!
//! ```
//! use astchunk::{chunk_document, ChunkingConfig, LanguageId, SourceDocument};
//!
//! let doc = SourceDocument::new("a.py", &b"def f():\n    return 1\n"[..], LanguageId::Python);
//! let chunks = chunk_document(&doc, &ChunkingConfig::default()).unwrap();
//! assert_eq!(chunks.len(), 1);
//! assert_eq!(chunks[0].text(&doc), doc.bytes());
//! ```

pub mod api;
pub mod chunk;
pub mod corpus;
pub mod document;
pub mod error;
pub mod eval;
pub mod language;
pub mod syntax;

pub use chunk::{
    chunk_document, chunk_tree, fixed_size_line_chunker, Breadcrumb, Chunk, ChunkingConfig,
    OversizePolicy,
};
pub use corpus::{ChunkRecord, ChunkStrategy, StatsReport, StrategyKind};
pub use document::SourceDocument;
pub use error::{Error, Result};
pub use eval::{EvalReport, Query, ScoredList};
pub use language::{detect_language, LanguageId};
pub use syntax::{parse, SyntaxNode, SyntaxTree};
