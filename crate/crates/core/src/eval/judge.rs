use std::collections::HashSet;

use crate::corpus::ChunkRecord;

use super::query::GoldSpan;

/// A chunk is relevant when it shares at least one line with a gold span in
/// the same file.
pub fn judge(chunk: &ChunkRecord, gold: &[GoldSpan]) -> bool {
    gold.iter().any(|g| {
        g.path == chunk.path && g.start_line <= chunk.end_line && chunk.start_line <= g.end_line
    })
}

/// Relevant chunk ids for one query.
#[derive(Debug, Clone, Default)]
pub struct Judgments {
    relevant: HashSet<String>,
}

impl Judgments {
    pub fn new(records: &[ChunkRecord], gold: &[GoldSpan]) -> Self {
        Judgments {
            relevant: records
                .iter()
                .filter(|r| judge(r, gold))
                .map(|r| r.id.clone())
                .collect(),
        }
    }

    pub fn is_relevant(&self, id: &str) -> bool {
        self.relevant.contains(id)
    }

    pub fn total_relevant(&self) -> usize {
        self.relevant.len()
    }

    /// Relevance flags of a ranking, in rank order.
    pub fn flags<'a>(&self, ids: impl Iterator<Item = &'a str>) -> Vec<bool> {
        ids.map(|id| self.is_relevant(id)).collect()
    }
}
