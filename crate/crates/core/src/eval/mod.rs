//! Retrieval evaluation at desk scale.
//!
//! Relevance comes from gold line spans, retrieval from a lexical BM25 scorer,
//! and AST-chunk scores can be projected onto another chunking of the same
//! files through per-line scores, so both chunkings are ranked on one scale.

mod context;
mod judge;
mod lexical;
mod metrics;
mod query;
mod report;
mod score_map;

pub use context::{pack_context, ApproxTokenCounter, TokenCounter};
pub use judge::{judge, Judgments};
pub use lexical::{lexical_retrieve, tokenize, LexicalIndex, BM25_B, BM25_K1};
pub use metrics::{ndcg_at_k, precision_at_k, recall_at_k};
pub use query::{read_queries, read_queries_from, GoldSpan, Query};
pub use report::{evaluate, CutoffMetrics, EvalReport, QueryResult, StrategyReport};
pub use score_map::{rescore_baseline_chunks, scores_to_lines, Aggregation, LineScores};

use serde::{Deserialize, Serialize};

/// A ranking for one query: `(chunk id, score)` by descending score, ties by
/// ascending id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoredList {
    pub query_id: String,
    pub entries: Vec<(String, f64)>,
}

impl ScoredList {
    /// Sorts `entries` into rank order.
    pub fn new(query_id: impl Into<String>, mut entries: Vec<(String, f64)>) -> Self {
        entries.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        ScoredList {
            query_id: query_id.into(),
            entries,
        }
    }

    pub fn truncate(mut self, k: usize) -> Self {
        self.entries.truncate(k);
        self
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(id, _)| id.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
