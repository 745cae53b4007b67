use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::ChunkRecord;
use crate::error::{Error, Result};

use super::judge::Judgments;
use super::lexical::LexicalIndex;
use super::metrics::{ndcg_at_k, precision_at_k, recall_at_k};
use super::query::Query;
use super::score_map::{rescore_baseline_chunks, scores_to_lines, Aggregation};
use super::ScoredList;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutoffMetrics {
    pub k: usize,
    pub ndcg: f64,
    pub precision: f64,
    pub recall: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QueryResult {
    pub query_id: String,
    pub total_relevant: usize,
    /// Empty when the query has no relevant chunk in this chunking.
    pub metrics: Vec<CutoffMetrics>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrategyReport {
    pub name: String,
    pub chunk_count: usize,
    pub queries_evaluated: usize,
    /// Queries excluded from the averages because no chunk was relevant.
    pub queries_without_relevant: usize,
    /// Macro averages over evaluated queries.
    pub metrics: Vec<CutoffMetrics>,
    pub per_query: Vec<QueryResult>,
}

impl StrategyReport {
    pub fn at(&self, k: usize) -> Option<&CutoffMetrics> {
        self.metrics.iter().find(|m| m.k == k)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub cutoffs: Vec<usize>,
    pub query_count: usize,
    pub strategies: Vec<StrategyReport>,
}

impl EvalReport {
    pub fn strategy(&self, name: &str) -> Option<&StrategyReport> {
        self.strategies.iter().find(|s| s.name == name)
    }
}

fn score_rankings(
    name: &str,
    records: &[ChunkRecord],
    queries: &[Query],
    rankings: &[ScoredList],
    cutoffs: &[usize],
) -> Result<StrategyReport> {
    let per_query: Vec<QueryResult> = queries
        .par_iter()
        .zip(rankings)
        .map(|(query, ranking)| {
            let judgments = Judgments::new(records, &query.gold);
            let total = judgments.total_relevant();
            let flags = judgments.flags(ranking.ids());
            let metrics = if total == 0 {
                Vec::new()
            } else {
                cutoffs
                    .iter()
                    .map(|&k| {
                        Ok(CutoffMetrics {
                            k,
                            ndcg: ndcg_at_k(&flags, total, k)?,
                            precision: precision_at_k(&flags, k)?,
                            recall: recall_at_k(&flags, total, k)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            Ok(QueryResult {
                query_id: query.id.clone(),
                total_relevant: total,
                metrics,
            })
        })
        .collect::<Result<_>>()?;

    let evaluated: Vec<&QueryResult> = per_query.iter().filter(|q| !q.metrics.is_empty()).collect();
    let n = evaluated.len();
    let metrics = cutoffs
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let avg = |f: fn(&CutoffMetrics) -> f64| {
                if n == 0 {
                    0.0
                } else {
                    evaluated.iter().map(|q| f(&q.metrics[i])).sum::<f64>() / n as f64
                }
            };
            CutoffMetrics {
                k,
                ndcg: avg(|m| m.ndcg),
                precision: avg(|m| m.precision),
                recall: avg(|m| m.recall),
            }
        })
        .collect();
    Ok(StrategyReport {
        name: name.to_string(),
        chunk_count: records.len(),
        queries_evaluated: n,
        queries_without_relevant: per_query.len() - n,
        metrics,
        per_query,
    })
}

/// Evaluates lexical retrieval over two chunkings of the same corpus.
///
/// The report has three columns: `ast` (retrieval over `ast_records`),
/// `baseline` (retrieval over `baseline_records`) and `ast-mapped`, where the
/// scores of every AST chunk are spread over its lines and aggregated onto
/// the baseline chunks, which are then ranked and judged as baseline chunks.
pub fn evaluate(
    ast_records: &[ChunkRecord],
    baseline_records: &[ChunkRecord],
    queries: &[Query],
    cutoffs: &[usize],
    aggregation: Aggregation,
) -> Result<EvalReport> {
    let mut cutoffs = cutoffs.to_vec();
    cutoffs.sort_unstable();
    cutoffs.dedup();
    if cutoffs.is_empty() || cutoffs[0] == 0 {
        return Err(Error::InvalidCutoff);
    }
    let depth = *cutoffs.last().expect("non-empty");

    let ast_index = LexicalIndex::new(ast_records);
    let base_index = LexicalIndex::new(baseline_records);

    let ast_rankings: Vec<ScoredList> = queries
        .par_iter()
        .map(|q| ast_index.retrieve(&q.id, &q.text, depth))
        .collect();
    let base_rankings: Vec<ScoredList> = queries
        .par_iter()
        .map(|q| base_index.retrieve(&q.id, &q.text, depth))
        .collect();
    let mapped_rankings: Vec<ScoredList> = queries
        .par_iter()
        .map(|q| {
            let scores = ast_index.score_all(&q.text);
            let lines = scores_to_lines(ast_records.iter().zip(scores));
            let mut ranked = rescore_baseline_chunks(&q.id, &lines, baseline_records, aggregation);
            ranked.entries.retain(|(_, s)| *s > 0.0);
            ranked.truncate(depth)
        })
        .collect();

    Ok(EvalReport {
        cutoffs: cutoffs.clone(),
        query_count: queries.len(),
        strategies: vec![
            score_rankings("ast", ast_records, queries, &ast_rankings, &cutoffs)?,
            score_rankings(
                "baseline",
                baseline_records,
                queries,
                &base_rankings,
                &cutoffs,
            )?,
            score_rankings(
                "ast-mapped",
                baseline_records,
                queries,
                &mapped_rankings,
                &cutoffs,
            )?,
        ],
    })
}
