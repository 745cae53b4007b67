/// Counts and truncates text in model tokens.
pub trait TokenCounter {
    fn count(&self, text: &str) -> usize;

    /// The longest prefix of `text` that counts at most `budget` tokens.
    fn truncate<'a>(&self, text: &'a str, budget: usize) -> &'a str;
}

/// Approximates one token per 4 bytes, rounding up.
#[derive(Debug, Clone, Copy, Default)]
pub struct ApproxTokenCounter;

impl TokenCounter for ApproxTokenCounter {
    fn count(&self, text: &str) -> usize {
        text.len().div_ceil(4)
    }

    fn truncate<'a>(&self, text: &'a str, budget: usize) -> &'a str {
        let mut end = budget.saturating_mul(4).min(text.len());
        while !text.is_char_boundary(end) {
            end -= 1;
        }
        &text[..end]
    }
}

/// Concatenates ranked chunk texts until `budget` tokens are used. The first
/// chunk that does not fit is truncated to the remaining budget and packing
/// stops there.
pub fn pack_context<S: AsRef<str>>(
    ranked: &[S],
    budget: usize,
    counter: &impl TokenCounter,
) -> String {
    let mut out = String::new();
    let mut used = 0;
    for text in ranked {
        let text = text.as_ref();
        let cost = counter.count(text);
        if used + cost <= budget {
            out.push_str(text);
            used += cost;
        } else {
            out.push_str(counter.truncate(text, budget - used));
            break;
        }
    }
    out
}
