//! Binary-relevance ranking metrics over a ranked list of relevance flags.
//!
//! `relevance[i]` tells whether the item at rank `i + 1` is relevant. Lists
//! shorter than `k` are treated as padded with non-relevant items.

use crate::error::{Error, Result};

fn check(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidCutoff)
    } else {
        Ok(())
    }
}

fn hits(relevance: &[bool], k: usize) -> usize {
    relevance.iter().take(k).filter(|&&r| r).count()
}

/// Relevant items in the top `k`, divided by `k`.
pub fn precision_at_k(relevance: &[bool], k: usize) -> Result<f64> {
    check(k)?;
    Ok(hits(relevance, k) as f64 / k as f64)
}

/// Relevant items in the top `k`, divided by all relevant items. Zero when
/// nothing is relevant.
pub fn recall_at_k(relevance: &[bool], total_relevant: usize, k: usize) -> Result<f64> {
    check(k)?;
    if total_relevant == 0 {
        return Ok(0.0);
    }
    Ok((hits(relevance, k) as f64 / total_relevant as f64).min(1.0))
}

/// Normalized DCG with gain 1 per relevant item and discount
/// `1 / log2(rank + 1)`. The ideal ranking puts all `total_relevant` items
/// first. Zero when nothing is relevant.
pub fn ndcg_at_k(relevance: &[bool], total_relevant: usize, k: usize) -> Result<f64> {
    check(k)?;
    let discount = |rank: usize| 1.0 / ((rank + 1) as f64).log2();
    let dcg: f64 = relevance
        .iter()
        .take(k)
        .enumerate()
        .filter(|(_, &r)| r)
        .map(|(i, _)| discount(i + 1))
        .sum();
    let ideal: f64 = (1..=total_relevant.min(k)).map(discount).sum();
    if ideal == 0.0 {
        return Ok(0.0);
    }
    Ok((dcg / ideal).min(1.0))
}
