//! Language registry: names, file extensions and grammars.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A language with a loaded grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LanguageId {
    Python,
    Java,
    #[serde(rename = "csharp")]
    CSharp,
    TypeScript,
}

impl LanguageId {
    pub const ALL: [LanguageId; 4] = [
        LanguageId::Python,
        LanguageId::Java,
        LanguageId::CSharp,
        LanguageId::TypeScript,
    ];

    /// Registry key, also used in serialized records.
    pub fn name(self) -> &'static str {
        match self {
            LanguageId::Python => "python",
            LanguageId::Java => "java",
            LanguageId::CSharp => "csharp",
            LanguageId::TypeScript => "typescript",
        }
    }

    /// Lowercase extensions (without the dot) mapped to this language.
    pub fn extensions(self) -> &'static [&'static str] {
        match self {
            LanguageId::Python => &["py"],
            LanguageId::Java => &["java"],
            LanguageId::CSharp => &["cs"],
            LanguageId::TypeScript => &["ts", "tsx"],
        }
    }

    pub fn from_extension(ext: &str) -> Option<LanguageId> {
        let ext = ext.to_ascii_lowercase();
        LanguageId::ALL
            .into_iter()
            .find(|lang| lang.extensions().contains(&ext.as_str()))
    }

    /// The tree-sitter grammar for this language.
    ///
    /// TypeScript uses the TSX grammar, a superset that also accepts `.tsx`
    /// files. Type assertions of the `<T>expr` form parse as JSX there; the
    /// parser recovers and the text is kept either way.
    pub fn grammar(self) -> tree_sitter::Language {
        match self {
            LanguageId::Python => tree_sitter_python::LANGUAGE.into(),
            LanguageId::Java => tree_sitter_java::LANGUAGE.into(),
            LanguageId::CSharp => tree_sitter_c_sharp::LANGUAGE.into(),
            LanguageId::TypeScript => tree_sitter_typescript::LANGUAGE_TSX.into(),
        }
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LanguageId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "python" | "py" => Ok(LanguageId::Python),
            "java" => Ok(LanguageId::Java),
            "csharp" | "c#" | "cs" => Ok(LanguageId::CSharp),
            "typescript" | "ts" | "tsx" => Ok(LanguageId::TypeScript),
            _ => Err(Error::UnregisteredLanguage(s.to_string())),
        }
    }
}

/// Detects a language from the path's extension, case-insensitively.
pub fn detect_language(path: impl AsRef<Path>) -> Option<LanguageId> {
    let ext = path.as_ref().extension()?.to_str()?;
    LanguageId::from_extension(ext)
}
