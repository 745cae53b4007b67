//! Okapi BM25 over identifier-aware tokens.

use std::collections::HashMap;

use crate::corpus::ChunkRecord;

use super::ScoredList;

pub const BM25_K1: f64 = 1.2;
pub const BM25_B: f64 = 0.75;

/// Splits on non-alphanumerics and camelCase boundaries, lowercased.
///
/// `parseHTTPRequest_v2` yields `parse`, `http`, `request`, `v2`.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for word in text
        .split(|c: char| !c.is_alphanumeric())
        .filter(|w| !w.is_empty())
    {
        let chars: Vec<char> = word.chars().collect();
        let mut start = 0;
        for i in 1..chars.len() {
            let (prev, cur) = (chars[i - 1], chars[i]);
            let next_lower = chars.get(i + 1).is_some_and(|c| c.is_lowercase());
            let boundary = (prev.is_lowercase() && cur.is_uppercase())
                || (prev.is_uppercase() && cur.is_uppercase() && next_lower);
            if boundary {
                tokens.push(chars[start..i].iter().collect::<String>().to_lowercase());
                start = i;
            }
        }
        tokens.push(chars[start..].iter().collect::<String>().to_lowercase());
    }
    tokens
}

/// An inverted index over chunk texts.
#[derive(Debug, Clone)]
pub struct LexicalIndex {
    ids: Vec<String>,
    lengths: Vec<usize>,
    avg_len: f64,
    /// term -> (doc index, term frequency)
    postings: HashMap<String, Vec<(usize, usize)>>,
}

impl LexicalIndex {
    pub fn new(records: &[ChunkRecord]) -> Self {
        let mut postings: HashMap<String, Vec<(usize, usize)>> = HashMap::new();
        let mut lengths = Vec::with_capacity(records.len());
        for (doc, record) in records.iter().enumerate() {
            let tokens = tokenize(&record.text);
            lengths.push(tokens.len());
            let mut tf: HashMap<String, usize> = HashMap::new();
            for t in tokens {
                *tf.entry(t).or_default() += 1;
            }
            for (term, count) in tf {
                postings.entry(term).or_default().push((doc, count));
            }
        }
        let avg_len = if lengths.is_empty() {
            0.0
        } else {
            lengths.iter().sum::<usize>() as f64 / lengths.len() as f64
        };
        LexicalIndex {
            ids: records.iter().map(|r| r.id.clone()).collect(),
            lengths,
            avg_len,
            postings,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// `ln(1 + (N - df + 0.5) / (df + 0.5))`, never negative.
    pub fn idf(&self, term: &str) -> f64 {
        let n = self.ids.len() as f64;
        let df = self.postings.get(term).map_or(0, Vec::len) as f64;
        (1.0 + (n - df + 0.5) / (df + 0.5)).ln()
    }

    /// BM25 score of every indexed chunk, in index order. Repeated query
    /// terms count once.
    pub fn score_all(&self, query: &str) -> Vec<f64> {
        let mut scores = vec![0.0; self.ids.len()];
        let mut terms = tokenize(query);
        terms.sort();
        terms.dedup();
        for term in terms {
            let Some(postings) = self.postings.get(&term) else {
                continue;
            };
            let idf = self.idf(&term);
            for &(doc, tf) in postings {
                let tf = tf as f64;
                let norm = if self.avg_len > 0.0 {
                    1.0 - BM25_B + BM25_B * self.lengths[doc] as f64 / self.avg_len
                } else {
                    1.0
                };
                scores[doc] += idf * tf * (BM25_K1 + 1.0) / (tf + BM25_K1 * norm);
            }
        }
        scores
    }

    /// Top `k` chunks with a positive score.
    pub fn retrieve(&self, query_id: &str, query: &str, k: usize) -> ScoredList {
        let entries = self
            .score_all(query)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| *s > 0.0)
            .map(|(i, s)| (self.ids[i].clone(), s))
            .collect();
        ScoredList::new(query_id, entries).truncate(k)
    }
}

/// Builds an index over `records` and returns the top `k` for `query`.
pub fn lexical_retrieve(query: &str, records: &[ChunkRecord], k: usize) -> ScoredList {
    LexicalIndex::new(records).retrieve("", query, k)
}
