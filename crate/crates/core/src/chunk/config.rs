use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::language::LanguageId;

pub const DEFAULT_MAX_CHUNK_SIZE: usize = 2000;

/// What to do with a childless node that alone exceeds the budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OversizePolicy {
    /// Split the node's text on line boundaries (and inside overlong lines).
    #[default]
    LineSplit,
    /// Emit the node as one chunk over budget.
    EmitOversized,
}

/// Node kinds that open a class-like or function-like scope.
///
/// An entry of the form `parent>kind` only matches a `kind` node whose parent
/// is a `parent` node; it then takes its name from the parent. This is how an
/// arrow function bound to a variable declarator is recognized.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LanguageKinds {
    pub class_like: Vec<String>,
    pub function_like: Vec<String>,
}

impl LanguageKinds {
    fn new(class_like: &[&str], function_like: &[&str]) -> Self {
        LanguageKinds {
            class_like: class_like.iter().map(|s| s.to_string()).collect(),
            function_like: function_like.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn defaults(lang: LanguageId) -> Self {
        match lang {
            LanguageId::Python => Self::new(&["class_definition"], &["function_definition"]),
            LanguageId::Java => Self::new(
                &["class_declaration", "interface_declaration"],
                &["method_declaration", "constructor_declaration"],
            ),
            LanguageId::CSharp => Self::new(
                &[
                    "class_declaration",
                    "struct_declaration",
                    "interface_declaration",
                ],
                &["method_declaration", "constructor_declaration"],
            ),
            LanguageId::TypeScript => Self::new(
                &["class_declaration"],
                &[
                    "function_declaration",
                    "method_definition",
                    "variable_declarator>arrow_function",
                ],
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ChunkingConfig {
    /// Budget in non-whitespace bytes.
    pub max_chunk_size: usize,
    /// `false` disables sibling packing ("split-only").
    pub merge_enabled: bool,
    pub oversize_policy: OversizePolicy,
    pub language_kinds: BTreeMap<LanguageId, LanguageKinds>,
}

impl Default for ChunkingConfig {
    fn default() -> Self {
        ChunkingConfig {
            max_chunk_size: DEFAULT_MAX_CHUNK_SIZE,
            merge_enabled: true,
            oversize_policy: OversizePolicy::LineSplit,
            language_kinds: LanguageId::ALL
                .into_iter()
                .map(|lang| (lang, LanguageKinds::defaults(lang)))
                .collect(),
        }
    }
}

impl ChunkingConfig {
    pub fn with_max_chunk_size(mut self, max_chunk_size: usize) -> Self {
        self.max_chunk_size = max_chunk_size;
        self
    }

    pub fn with_merge(mut self, merge_enabled: bool) -> Self {
        self.merge_enabled = merge_enabled;
        self
    }

    pub fn with_oversize_policy(mut self, policy: OversizePolicy) -> Self {
        self.oversize_policy = policy;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_chunk_size == 0 {
            return Err(Error::InvalidConfig(
                "max_chunk_size must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn kinds(&self, lang: LanguageId) -> LanguageKinds {
        self.language_kinds
            .get(&lang)
            .cloned()
            .unwrap_or_else(|| LanguageKinds::defaults(lang))
    }

    /// Stable 16-hex-digit digest of the configuration.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("config serializes");
        let hash = Sha256::digest(&canonical);
        hash[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}
