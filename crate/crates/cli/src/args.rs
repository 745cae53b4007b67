use std::path::PathBuf;

use astchunk::eval::Aggregation;
use astchunk::{OversizePolicy, StrategyKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "astchunk",
    version,
    about = "Syntax-aware code chunking and retrieval evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chunk every supported file under a directory into JSON lines.
    Chunk(ChunkArgs),
    /// Summarize a chunk record file as one JSON document.
    Stats(StatsArgs),
    /// Compare retrieval over two chunkings of the same corpus.
    Eval(EvalArgs),
    /// Retrieve chunks for a query and pack them into a context string.
    Pack(PackArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Cast,
    FixedLine,
}

impl From<StrategyArg> for StrategyKind {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Cast => StrategyKind::Cast,
            StrategyArg::FixedLine => StrategyKind::FixedLine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    LineSplit,
    EmitOversized,
}

impl From<PolicyArg> for OversizePolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::LineSplit => OversizePolicy::LineSplit,
            PolicyArg::EmitOversized => OversizePolicy::EmitOversized,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AggregationArg {
    Mean,
    Max,
    Sum,
}

impl From<AggregationArg> for Aggregation {
    fn from(a: AggregationArg) -> Self {
        match a {
            AggregationArg::Mean => Aggregation::Mean,
            AggregationArg::Max => Aggregation::Max,
            AggregationArg::Sum => Aggregation::Sum,
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Flags every subcommand accepts.
#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Flat JSON file with default values for any flag; flags win.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Write output here instead of standard output.
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChunkArgs {
    /// Repository root to walk.
    pub root: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Chunking strategy [default: cast]
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,
    /// Budget in non-whitespace bytes for the cast strategy [default: 2000]
    #[arg(long, value_parser = positive, value_name = "N")]
    pub max_chunk_size: Option<usize>,
    /// Lines per chunk for the fixed-line strategy [default: 30]
    #[arg(long, value_parser = positive, value_name = "N")]
    pub lines: Option<usize>,
    /// Pack adjacent siblings into one chunk (the default).
    #[arg(long, overrides_with = "no_merge")]
    pub merge: bool,
    /// Split-only mode: never pack siblings together.
    #[arg(long, overrides_with = "merge")]
    pub no_merge: bool,
    /// What to do with a childless node over budget [default: line-split]
    #[arg(long, value_enum)]
    pub oversize_policy: Option<PolicyArg>,
    /// Only chunk files whose relative path matches one of these globs.
    #[arg(long, value_name = "GLOB")]
    pub include: Vec<String>,
    /// Skip files whose relative path matches one of these globs.
    #[arg(long, value_name = "GLOB")]
    pub exclude: Vec<String>,
    /// Worker threads [default: logical cores]
    #[arg(long, value_parser = positive, value_name = "N")]
    pub jobs: Option<usize>,
}

impl ChunkArgs {
    pub fn merge_flag(&self) -> Option<bool> {
        if self.no_merge {
            Some(false)
        } else if self.merge {
            Some(true)
        } else {
            None
        }
    }
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    /// Chunk record file (JSON lines).
    pub records: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Records of the syntax-aware run.
    pub ast_records: PathBuf,
    /// Records of the baseline run over the same files.
    pub baseline_records: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Queries file (JSON lines with gold line spans).
    #[arg(long, value_name = "PATH")]
    pub queries: Option<PathBuf>,
    /// Extra cutoff reported next to 5 and 10 [default: 5]
    #[arg(short, long, value_parser = positive, value_name = "N")]
    pub k: Option<usize>,
    /// How line scores combine when mapping onto baseline chunks [default: mean]
    #[arg(long, value_enum)]
    pub aggregation: Option<AggregationArg>,
}

#[derive(Debug, Args)]
pub struct PackArgs {
    /// Chunk record file to retrieve from.
    pub records: PathBuf,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Query text.
    #[arg(long)]
    pub query: String,
    /// Number of chunks to retrieve [default: 5]
    #[arg(short, long, value_parser = positive, value_name = "N")]
    pub k: Option<usize>,
    /// Context budget in approximate tokens (4 bytes each) [default: 4000]
    #[arg(long, value_parser = positive, value_name = "N")]
    pub context_budget: Option<usize>,
}
