//! Flat JSON config file and its merge with command-line flags.

use std::path::{Path, PathBuf};

use astchunk::corpus::WalkOptions;
use astchunk::eval::Aggregation;
use astchunk::{ChunkStrategy, ChunkingConfig, OversizePolicy, StrategyKind};
use serde::Deserialize;

use crate::args::{ChunkArgs, CommonArgs, EvalArgs, PackArgs};
use crate::error::{CliError, CliResult};

pub const DEFAULT_LINES_PER_CHUNK: usize = 30;
pub const DEFAULT_K: usize = 5;
pub const DEFAULT_CONTEXT_BUDGET: usize = 4000;
/// Cutoffs always reported by `eval`.
pub const REPORTED_CUTOFFS: [usize; 2] = [5, 10];

/// Every key is optional; unknown keys are rejected.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub strategy: Option<StrategyKind>,
    pub max_chunk_size: Option<usize>,
    pub lines_per_chunk: Option<usize>,
    pub merge: Option<bool>,
    pub oversize_policy: Option<OversizePolicy>,
    pub include: Option<Vec<String>>,
    pub exclude: Option<Vec<String>>,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub queries: Option<PathBuf>,
    pub k: Option<usize>,
    pub aggregation: Option<Aggregation>,
    pub context_budget: Option<usize>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let config: FileConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))?;
        for (key, value) in [
            ("max_chunk_size", config.max_chunk_size),
            ("lines_per_chunk", config.lines_per_chunk),
            ("jobs", config.jobs),
            ("k", config.k),
            ("context_budget", config.context_budget),
        ] {
            if value == Some(0) {
                return Err(CliError::Usage(format!(
                    "invalid config {}: {key} must be at least 1",
                    path.display()
                )));
            }
        }
        Ok(config)
    }
}

fn output(common: &CommonArgs, file: &FileConfig) -> Option<PathBuf> {
    common.output.clone().or_else(|| file.output.clone())
}

pub struct ChunkSettings {
    pub root: PathBuf,
    pub strategy: ChunkStrategy,
    pub walk: WalkOptions,
    pub jobs: usize,
    pub output: Option<PathBuf>,
}

impl ChunkSettings {
    pub fn resolve(args: &ChunkArgs, file: &FileConfig) -> CliResult<Self> {
        let kind = args
            .strategy
            .map(StrategyKind::from)
            .or(file.strategy)
            .unwrap_or(StrategyKind::Cast);
        let strategy = match kind {
            StrategyKind::Cast => {
                let mut config = ChunkingConfig::default();
                if let Some(n) = args.max_chunk_size.or(file.max_chunk_size) {
                    config.max_chunk_size = n;
                }
                if let Some(merge) = args.merge_flag().or(file.merge) {
                    config.merge_enabled = merge;
                }
                if let Some(policy) = args
                    .oversize_policy
                    .map(OversizePolicy::from)
                    .or(file.oversize_policy)
                {
                    config.oversize_policy = policy;
                }
                ChunkStrategy::Cast(config)
            }
            StrategyKind::FixedLine => ChunkStrategy::FixedLine {
                lines_per_chunk: args
                    .lines
                    .or(file.lines_per_chunk)
                    .unwrap_or(DEFAULT_LINES_PER_CHUNK),
            },
        };
        strategy.validate()?;
        let pick = |flag: &Vec<String>, file: &Option<Vec<String>>| {
            if flag.is_empty() {
                file.clone().unwrap_or_default()
            } else {
                flag.clone()
            }
        };
        let jobs = args
            .jobs
            .or(file.jobs)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        Ok(ChunkSettings {
            root: args.root.clone(),
            strategy,
            walk: WalkOptions {
                include: pick(&args.include, &file.include),
                exclude: pick(&args.exclude, &file.exclude),
            },
            jobs,
            output: output(&args.common, file),
        })
    }
}

pub struct EvalSettings {
    pub queries: PathBuf,
    pub cutoffs: Vec<usize>,
    pub aggregation: Aggregation,
    pub output: Option<PathBuf>,
}

impl EvalSettings {
    pub fn resolve(args: &EvalArgs, file: &FileConfig) -> CliResult<Self> {
        let queries = args
            .queries
            .clone()
            .or_else(|| file.queries.clone())
            .ok_or_else(|| CliError::Usage("eval needs --queries".into()))?;
        let k = args.k.or(file.k).unwrap_or(DEFAULT_K);
        let mut cutoffs = REPORTED_CUTOFFS.to_vec();
        cutoffs.push(k);
        cutoffs.sort_unstable();
        cutoffs.dedup();
        Ok(EvalSettings {
            queries,
            cutoffs,
            aggregation: args
                .aggregation
                .map(Aggregation::from)
                .or(file.aggregation)
                .unwrap_or_default(),
            output: output(&args.common, file),
        })
    }
}

pub struct PackSettings {
    pub k: usize,
    pub context_budget: usize,
    pub output: Option<PathBuf>,
}

impl PackSettings {
    pub fn resolve(args: &PackArgs, file: &FileConfig) -> Self {
        PackSettings {
            k: args.k.or(file.k).unwrap_or(DEFAULT_K),
            context_budget: args
                .context_budget
                .or(file.context_budget)
                .unwrap_or(DEFAULT_CONTEXT_BUDGET),
            output: output(&args.common, file),
        }
    }
}
