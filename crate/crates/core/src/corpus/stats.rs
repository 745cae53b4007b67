use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::record::ChunkRecord;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SizeStats {
    pub mean: f64,
    pub median: f64,
    pub max: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LineStats {
    pub mean: f64,
    pub median: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LanguageStats {
    pub file_count: usize,
    pub chunk_count: usize,
    pub size_non_ws: SizeStats,
    pub lines_per_chunk: LineStats,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub file_count: usize,
    pub chunk_count: usize,
    pub size_non_ws: SizeStats,
    pub lines_per_chunk: LineStats,
    pub per_language: BTreeMap<String, LanguageStats>,
}

fn mean(values: &[usize]) -> f64 {
    if values.is_empty() {
        0.0
    } else {
        values.iter().sum::<usize>() as f64 / values.len() as f64
    }
}

fn median(values: &[usize]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    match sorted.len() {
        0 => 0.0,
        n if n % 2 == 1 => sorted[n / 2] as f64,
        n => (sorted[n / 2 - 1] + sorted[n / 2]) as f64 / 2.0,
    }
}

fn summarize<'r>(records: impl Iterator<Item = &'r ChunkRecord>) -> LanguageStats {
    let mut files = BTreeSet::new();
    let mut sizes = Vec::new();
    let mut lines = Vec::new();
    for r in records {
        files.insert(r.path.as_str());
        sizes.push(r.size_non_ws);
        lines.push(r.line_count());
    }
    LanguageStats {
        file_count: files.len(),
        chunk_count: sizes.len(),
        size_non_ws: SizeStats {
            mean: mean(&sizes),
            median: median(&sizes),
            max: sizes.iter().copied().max().unwrap_or(0),
        },
        lines_per_chunk: LineStats {
            mean: mean(&lines),
            median: median(&lines),
        },
    }
}

pub fn compute_stats(records: &[ChunkRecord]) -> StatsReport {
    let total = summarize(records.iter());
    let languages: BTreeSet<_> = records.iter().map(|r| r.language).collect();
    let per_language = languages
        .into_iter()
        .map(|lang| {
            (
                lang.name().to_string(),
                summarize(records.iter().filter(|r| r.language == lang)),
            )
        })
        .collect();
    StatsReport {
        file_count: total.file_count,
        chunk_count: total.chunk_count,
        size_non_ws: total.size_non_ws,
        lines_per_chunk: total.lines_per_chunk,
        per_language,
    }
}
