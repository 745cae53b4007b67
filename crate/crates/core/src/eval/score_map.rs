//! Projecting chunk scores onto lines, and lines back onto other chunks.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::corpus::ChunkRecord;

use super::ScoredList;

/// How line scores combine into a chunk score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregation {
    #[default]
    Mean,
    Max,
    Sum,
}

/// Per-line scores, keyed by file path. Lines no chunk covers score 0.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LineScores {
    files: HashMap<String, Vec<Option<f64>>>,
}

impl LineScores {
    pub fn get(&self, path: &str, line: usize) -> f64 {
        self.files
            .get(path)
            .and_then(|lines| lines.get(line.wrapping_sub(1)))
            .copied()
            .flatten()
            .unwrap_or(0.0)
    }

    /// Scores of every line of `path` up to its last scored line.
    pub fn file(&self, path: &str) -> Option<Vec<f64>> {
        self.files
            .get(path)
            .map(|lines| lines.iter().map(|s| s.unwrap_or(0.0)).collect())
    }
}

/// Gives every line of each scored chunk that chunk's score. Where chunks
/// share a line, the line keeps the higher score.
pub fn scores_to_lines<'r>(scored: impl IntoIterator<Item = (&'r ChunkRecord, f64)>) -> LineScores {
    let mut files: HashMap<String, Vec<Option<f64>>> = HashMap::new();
    for (chunk, score) in scored {
        if chunk.end_line == 0 {
            continue;
        }
        let lines = files.entry(chunk.path.clone()).or_default();
        if lines.len() < chunk.end_line {
            lines.resize(chunk.end_line, None);
        }
        for slot in &mut lines[chunk.start_line.max(1) - 1..chunk.end_line] {
            *slot = Some(slot.map_or(score, |s| s.max(score)));
        }
    }
    LineScores { files }
}

/// Scores each baseline chunk from the scores of its lines and ranks them.
pub fn rescore_baseline_chunks(
    query_id: &str,
    lines: &LineScores,
    baseline: &[ChunkRecord],
    aggregation: Aggregation,
) -> ScoredList {
    let entries = baseline
        .iter()
        .map(|chunk| {
            let values = (chunk.start_line..=chunk.end_line).map(|l| lines.get(&chunk.path, l));
            let score = match aggregation {
                Aggregation::Mean => mean(values),
                Aggregation::Max => values.fold(0.0, f64::max),
                Aggregation::Sum => values.sum(),
            };
            (chunk.id.clone(), score)
        })
        .collect();
    ScoredList::new(query_id, entries)
}

/// Mean over run-length segments, `sum(v * count / n)`, so a constant
/// sequence averages to exactly its value.
fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let mut runs: Vec<(f64, usize)> = Vec::new();
    for v in values {
        match runs.last_mut() {
            Some((last, count)) if *last == v => *count += 1,
            _ => runs.push((v, 1)),
        }
    }
    let n: usize = runs.iter().map(|(_, c)| c).sum();
    if n == 0 {
        return 0.0;
    }
    runs.iter().map(|&(v, c)| v * (c as f64 / n as f64)).sum()
}
