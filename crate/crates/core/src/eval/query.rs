use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 1-based inclusive line range in one file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldSpan {
    pub path: String,
    pub start_line: usize,
    pub end_line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub id: String,
    pub text: String,
    pub gold: Vec<GoldSpan>,
}

/// Reads queries, one JSON object per line.
pub fn read_queries_from<R: Read>(reader: R) -> Result<Vec<Query>> {
    let mut queries = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line_no = i + 1;
        let malformed = |message: String| Error::MalformedQuery {
            line: line_no,
            message,
        };
        let line = line.map_err(|e| malformed(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let query: Query = serde_json::from_str(&line).map_err(|e| malformed(e.to_string()))?;
        if query.gold.is_empty() {
            return Err(malformed("query has no gold spans".into()));
        }
        if let Some(bad) = query
            .gold
            .iter()
            .find(|g| g.start_line == 0 || g.end_line < g.start_line)
        {
            return Err(malformed(format!(
                "bad line range {}-{} for {}",
                bad.start_line, bad.end_line, bad.path
            )));
        }
        queries.push(query);
    }
    Ok(queries)
}

pub fn read_queries(path: &Path) -> Result<Vec<Query>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_queries_from(file)
}
