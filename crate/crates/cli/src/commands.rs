use std::collections::HashMap;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use astchunk::corpus::{chunk_corpus, compute_stats, read_records, walk_repository, write_records};
use astchunk::eval::{evaluate, pack_context, read_queries, ApproxTokenCounter, LexicalIndex};

use crate::args::{ChunkArgs, EvalArgs, PackArgs, StatsArgs};
use crate::error::{CliError, CliResult};
use crate::settings::{ChunkSettings, EvalSettings, FileConfig, PackSettings};

/// Runs `write` against the output file, or standard output when none is set.
fn with_output(
    path: Option<&Path>,
    write: impl FnOnce(&mut dyn Write) -> CliResult<()>,
) -> CliResult<()> {
    match path {
        Some(path) => {
            let mut file = File::create(path)
                .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", path.display())))?;
            write(&mut file)?;
            file.sync_all()
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
            lock.flush()
                .map_err(|e| CliError::Runtime(format!("cannot write output: {e}")))
        }
    }
}

fn write_json<T: serde::Serialize>(path: Option<&Path>, value: &T) -> CliResult<()> {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| CliError::Runtime(e.to_string()))?;
    text.push('\n');
    with_output(path, |out| {
        out.write_all(text.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write output: {e}")))
    })
}

pub fn chunk(args: &ChunkArgs) -> CliResult<()> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let settings = ChunkSettings::resolve(args, &file)?;
    if !settings.root.is_dir() {
        return Err(CliError::Runtime(format!(
            "{} is not a directory",
            settings.root.display()
        )));
    }
    let walked = walk_repository(&settings.root, &settings.walk)?;
    for err in &walked.errors {
        log::warn!("{err}");
    }
    let records = chunk_corpus(&walked.documents, &settings.strategy, settings.jobs)?;
    with_output(settings.output.as_deref(), |out| {
        Ok(write_records(out, &records)?)
    })?;
    let files = records
        .iter()
        .map(|r| r.path.as_str())
        .collect::<std::collections::BTreeSet<_>>()
        .len();
    eprintln!(
        "astchunk: {} records from {} files; skipped {} files (unsupported language), {} unreadable",
        records.len(),
        files,
        walked.skipped,
        walked.errors.len()
    );
    Ok(())
}

pub fn stats(args: &StatsArgs) -> CliResult<()> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let records = read_records(&args.records)?;
    let output = args.common.output.clone().or(file.output);
    write_json(output.as_deref(), &compute_stats(&records))
}

pub fn eval(args: &EvalArgs) -> CliResult<()> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let settings = EvalSettings::resolve(args, &file)?;
    let ast = read_records(&args.ast_records)?;
    let baseline = read_records(&args.baseline_records)?;
    let queries = read_queries(&settings.queries)?;
    let report = evaluate(
        &ast,
        &baseline,
        &queries,
        &settings.cutoffs,
        settings.aggregation,
    )?;
    for strategy in &report.strategies {
        if strategy.queries_without_relevant > 0 {
            log::warn!(
                "{}: {} queries have no relevant chunk and are left out of the averages",
                strategy.name,
                strategy.queries_without_relevant
            );
        }
    }
    write_json(settings.output.as_deref(), &report)
}

pub fn pack(args: &PackArgs) -> CliResult<()> {
    let file = FileConfig::load(args.common.config.as_deref())?;
    let settings = PackSettings::resolve(args, &file);
    let records = read_records(&args.records)?;
    let index = LexicalIndex::new(&records);
    let ranked = index.retrieve("query", &args.query, settings.k);
    let texts: HashMap<&str, &str> = records
        .iter()
        .map(|r| (r.id.as_str(), r.text.as_str()))
        .collect();
    let ordered: Vec<&str> = ranked.ids().map(|id| texts[id]).collect();
    let context = pack_context(&ordered, settings.context_budget, &ApproxTokenCounter);
    with_output(settings.output.as_deref(), |out| {
        out.write_all(context.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write output: {e}")))
    })
}
