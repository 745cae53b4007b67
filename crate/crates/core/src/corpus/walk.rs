use std::path::Path;

use globset::{Glob, GlobSet, GlobSetBuilder};
use walkdir::WalkDir;

use crate::document::SourceDocument;
use crate::error::{Error, Result};
use crate::language::detect_language;

/// Include and exclude globs, matched against `/`-separated relative paths.
#[derive(Debug, Clone, Default)]
pub struct WalkOptions {
    pub include: Vec<String>,
    pub exclude: Vec<String>,
}

#[derive(Debug, Default)]
pub struct WalkResult {
    /// Documents sorted by relative path.
    pub documents: Vec<SourceDocument>,
    /// Files skipped because no language matched their extension.
    pub skipped: usize,
    /// Files that matched but could not be read.
    pub errors: Vec<Error>,
}

fn build_set(globs: &[String]) -> Result<Option<GlobSet>> {
    if globs.is_empty() {
        return Ok(None);
    }
    let mut builder = GlobSetBuilder::new();
    for g in globs {
        let glob = Glob::new(g).map_err(|e| Error::InvalidGlob {
            glob: g.clone(),
            message: e.to_string(),
        })?;
        builder.add(glob);
    }
    builder.build().map(Some).map_err(|e| Error::InvalidGlob {
        glob: globs.join(","),
        message: e.to_string(),
    })
}

/// Collects the source files under `root`. Symlinks are not followed.
pub fn walk_repository(root: &Path, options: &WalkOptions) -> Result<WalkResult> {
    if !root.exists() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotFound, "root does not exist"),
        ));
    }
    let include = build_set(&options.include)?;
    let exclude = build_set(&options.exclude)?;
    let mut result = WalkResult::default();
    let mut found = Vec::new();

    for entry in WalkDir::new(root).follow_links(false) {
        let entry = match entry {
            Ok(entry) => entry,
            Err(err) => {
                let path = err.path().unwrap_or(root).to_path_buf();
                let io = err
                    .into_io_error()
                    .unwrap_or_else(|| std::io::Error::other("walk error"));
                result.errors.push(Error::io(path, io));
                continue;
            }
        };
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry.path().strip_prefix(root).unwrap_or(entry.path());
        let rel = rel
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        if include.as_ref().is_some_and(|set| !set.is_match(&rel))
            || exclude.as_ref().is_some_and(|set| set.is_match(&rel))
        {
            continue;
        }
        match detect_language(&rel) {
            Some(lang) => found.push((rel, entry.into_path(), lang)),
            None => result.skipped += 1,
        }
    }

    found.sort_by(|a, b| a.0.cmp(&b.0));
    for (rel, path, lang) in found {
        match std::fs::read(&path) {
            Ok(bytes) => result.documents.push(SourceDocument::new(rel, bytes, lang)),
            Err(err) => result.errors.push(Error::io(path, err)),
        }
    }
    Ok(result)
}
