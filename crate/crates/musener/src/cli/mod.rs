//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error. All randomness is
//! seeded through `--seed` flags; every command writes only to paths named by
//! flags, so identical inputs and seeds reproduce identical outputs.

mod manifest;
mod util;

pub use util::GAZETTEER_ENV;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::json;

use crate::corpus::{
    self, corpus_stats, parse_timestamp, read_corpus, read_schedule_jsonl, split_corpus,
    write_corpus, write_schedule_jsonl, TaggedTweet,
};
use crate::error::{Error, Result};
use crate::features::{fill_missing_pos_chunk, tweet_features};
use crate::matcher::{match_tweet, MatchConfig, MatchOutcome};
use crate::pipeline::{
    evaluate, reconcile_corpora, sweep, wilcoxon_rank_sum_with, EvalReport, Granularity, SweepRow,
    TypeReport, WilcoxonMethod,
};
use crate::tagger::{train, DecoderKind, LinearModel, TrainConfig};
use manifest::{write_manifest, RunInfo};
use util::{parallel_map, pct, resolve_gazetteers, resolve_stopwords};

#[derive(Parser)]
#[command(
    name = "musener",
    version,
    about = "Recognize Contributor and Musical Work mentions in radio-listener messages"
)]
struct Cli {
    /// Write a JSON run manifest (resolved flags, input digests) to this path
    #[arg(long, global = true, value_name = "PATH")]
    manifest: Option<PathBuf>,

    /// Worker threads for tagging and matching (outputs do not depend on it)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tokenize raw messages into an unlabeled corpus file
    Tokenize(TokenizeArgs),
    /// Split a corpus into train/testA/testB parts
    Split(SplitArgs),
    /// Build a schedule file from "Now Playing" bot messages
    ScheduleBuild(ScheduleBuildArgs),
    /// Token and entity counts of a labeled corpus
    Stats(StatsArgs),
    /// Train the linear tagger
    Train(TrainArgs),
    /// Tag a corpus with a trained model
    Tag(TagArgs),
    /// Recognize entities by matching against the broadcast schedule
    Match(MatchArgs),
    /// Merge model predictions with schedule predictions
    Reconcile(ReconcileArgs),
    /// Entity-level precision/recall/F1 of predictions against gold
    Eval(EvalArgs),
    /// Evaluate the schedule matcher over a threshold grid
    Sweep(SweepArgs),
    /// Wilcoxon rank-sum significance test on two samples
    Wilcoxon(WilcoxonArgs),
}

#[derive(Args)]
struct TokenizeArgs {
    /// Input file: plain text, one message per line (or JSONL with --jsonl)
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Treat input as JSONL records {"ts": ..., "text": ..., "id"?: ...}
    #[arg(long)]
    jsonl: bool,
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Train, testA, testB shares; must sum to 1
    #[arg(long, value_delimiter = ',', default_value = "0.8,0.1,0.1")]
    ratios: Vec<f64>,
    #[arg(long, value_name = "PATH")]
    out_train: PathBuf,
    #[arg(long, value_name = "PATH")]
    out_testa: PathBuf,
    #[arg(long, value_name = "PATH")]
    out_testb: PathBuf,
}

#[derive(Args)]
struct ScheduleBuildArgs {
    /// JSONL bot messages: {"ts": ISO-8601, "text": "Now Playing ..."}
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TrainArgs {
    /// Labeled training corpus
    #[arg(long, value_name = "PATH")]
    train: PathBuf,
    /// Gazetteer directory (default: $MUSENER_GAZETTEERS, then bundled lists)
    #[arg(long, value_name = "DIR")]
    gazetteers: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    epochs: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Decoder used during training: token | viterbi
    #[arg(long, default_value = "viterbi")]
    decoder: DecoderKind,
    /// Visit tweets in corpus order instead of shuffling each epoch
    #[arg(long)]
    no_shuffle: bool,
    /// Keep the final weights instead of the averaged ones
    #[arg(long)]
    no_average: bool,
    #[arg(long, value_name = "PATH")]
    model_out: PathBuf,
}

#[derive(Args)]
struct TagArgs {
    #[arg(long, value_name = "PATH")]
    model: PathBuf,
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_name = "DIR")]
    gazetteers: Option<PathBuf>,
    /// Decoder: token | viterbi
    #[arg(long, default_value = "viterbi")]
    decoder: DecoderKind,
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
}

#[derive(Args)]
struct MatchArgs {
    /// Schedule JSONL (raw bot messages or schedule-build output)
    #[arg(long, value_name = "PATH")]
    schedule: PathBuf,
    /// Corpus to match; tweets need `ts=` headers
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    /// Time window in seconds
    #[arg(long, default_value_t = 1200)]
    t: i64,
    /// Musical Work string-score threshold
    #[arg(long, default_value_t = 0.5)]
    w: f64,
    /// Contributor string-score threshold
    #[arg(long, default_value_t = 0.5)]
    c: f64,
    /// Weight of the string score in the final combination
    #[arg(long, default_value_t = 0.7)]
    alpha: f64,
    /// Stop-word file, one entry per line (default: bundled list)
    #[arg(long, value_name = "PATH")]
    stopwords: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
    /// Also write per-tweet candidate scores as JSONL
    #[arg(long, value_name = "PATH")]
    diagnostics: Option<PathBuf>,
}

#[derive(Args)]
struct ReconcileArgs {
    /// Predictions from the trained model
    #[arg(long, value_name = "PATH")]
    model_pred: PathBuf,
    /// Predictions from schedule matching
    #[arg(long, value_name = "PATH")]
    schedule_pred: PathBuf,
    /// Fallback granularity: type | tweet
    #[arg(long, default_value = "type")]
    granularity: Granularity,
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_name = "PATH")]
    gold: PathBuf,
    #[arg(long, value_name = "PATH")]
    pred: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_name = "PATH")]
    schedule: PathBuf,
    #[arg(long, value_name = "PATH")]
    gold: PathBuf,
    /// Time windows in seconds
    #[arg(long, value_delimiter = ',', default_value = "800,1000,1200")]
    t: Vec<i64>,
    /// Musical Work thresholds
    #[arg(long, value_delimiter = ',', default_value = "0.33,0.5")]
    w: Vec<f64>,
    /// Contributor thresholds
    #[arg(long, value_delimiter = ',', default_value = "0.33,0.5")]
    c: Vec<f64>,
    #[arg(long, default_value_t = 0.7)]
    alpha: f64,
    #[arg(long, value_name = "PATH")]
    stopwords: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WilcoxonArgs {
    /// First sample, comma-separated
    #[arg(long = "a", value_delimiter = ',', required = true)]
    a: Vec<f64>,
    /// Second sample, comma-separated
    #[arg(long = "b", value_delimiter = ',', required = true)]
    b: Vec<f64>,
    /// auto | exact | normal
    #[arg(long, default_value = "auto")]
    method: WilcoxonMethod,
    #[arg(long)]
    json: bool,
}

/// Parses `argv` and runs the selected command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli) {
        Ok(info) => {
            if let Some(path) = &cli.manifest {
                let duration_ms = started.elapsed().as_millis() as u64;
                if let Err(err) = write_manifest(path, &info, duration_ms) {
                    eprintln!("error: {err}");
                    return 2;
                }
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<RunInfo> {
    match &cli.command {
        Command::Tokenize(args) => cmd_tokenize(args),
        Command::Split(args) => cmd_split(args),
        Command::ScheduleBuild(args) => cmd_schedule_build(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Train(args) => cmd_train(args),
        Command::Tag(args) => cmd_tag(args, cli.jobs),
        Command::Match(args) => cmd_match(args, cli.jobs),
        Command::Reconcile(args) => cmd_reconcile(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Wilcoxon(args) => cmd_wilcoxon(args),
    }
}

#[derive(Deserialize)]
struct MessageRecord {
    ts: String,
    text: String,
    #[serde(default)]
    id: String,
}

fn cmd_tokenize(args: &TokenizeArgs) -> Result<RunInfo> {
    let text = std::fs::read_to_string(&args.input).map_err(|e| Error::io(&args.input, e))?;
    let mut tweets = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        if args.jsonl {
            let record: MessageRecord = serde_json::from_str(line).map_err(|e| {
                Error::format(&args.input, idx + 1, format!("bad JSON record: {e}"))
            })?;
            let ts = parse_timestamp(&record.ts)
                .map_err(|m| Error::format(&args.input, idx + 1, m))?;
            tweets.push(TaggedTweet::from_text(record.id, Some(ts), &record.text));
        } else {
            tweets.push(TaggedTweet::from_text("", None, line));
        }
    }
    write_corpus(&args.output, &tweets)?;
    eprintln!("tokenized {} messages -> {}", tweets.len(), args.output.display());

    let mut info = RunInfo::new("tokenize");
    info.flag("input", args.input.display().to_string());
    info.flag("jsonl", args.jsonl);
    info.flag("output", args.output.display().to_string());
    info.input("input", &args.input);
    Ok(info)
}

fn cmd_split(args: &SplitArgs) -> Result<RunInfo> {
    if args.ratios.len() != 3 {
        return Err(Error::InvalidRatios {
            reason: format!("expected 3 ratios, got {}", args.ratios.len()),
        });
    }
    let corpus = read_corpus(&args.input)?;
    let ratios = (args.ratios[0], args.ratios[1], args.ratios[2]);
    let (train_part, test_a, test_b) = split_corpus(&corpus, args.seed, ratios)?;
    write_corpus(&args.out_train, &train_part)?;
    write_corpus(&args.out_testa, &test_a)?;
    write_corpus(&args.out_testb, &test_b)?;
    eprintln!(
        "split {} tweets -> {} train / {} testA / {} testB",
        corpus.len(),
        train_part.len(),
        test_a.len(),
        test_b.len()
    );

    let mut info = RunInfo::new("split");
    info.flag("input", args.input.display().to_string());
    info.flag("seed", args.seed);
    info.flag("ratios", &args.ratios);
    info.flag("out_train", args.out_train.display().to_string());
    info.flag("out_testa", args.out_testa.display().to_string());
    info.flag("out_testb", args.out_testb.display().to_string());
    info.input("input", &args.input);
    Ok(info)
}

fn cmd_schedule_build(args: &ScheduleBuildArgs) -> Result<RunInfo> {
    let (schedule, skipped) = read_schedule_jsonl(&args.input)?;
    write_schedule_jsonl(&args.output, &schedule)?;
    eprintln!(
        "schedule: {} entries, {} lines skipped -> {}",
        schedule.len(),
        skipped,
        args.output.display()
    );

    let mut info = RunInfo::new("schedule-build");
    info.flag("input", args.input.display().to_string());
    info.flag("output", args.output.display().to_string());
    info.flag("skipped", skipped);
    info.input("input", &args.input);
    Ok(info)
}

fn cmd_stats(args: &StatsArgs) -> Result<RunInfo> {
    let corpus = read_corpus(&args.input)?;
    let stats = corpus_stats(&corpus)?;
    if args.json {
        let value = json!({
            "tweets": stats.tweets,
            "total_tokens": stats.total_tokens,
            "contributor_tokens": stats.contributor_tokens,
            "musical_work_tokens": stats.musical_work_tokens,
            "contributor_pct": stats.contributor_share * 100.0,
            "musical_work_pct": stats.musical_work_share * 100.0,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("{:<22}{:>8}", "Tweets", stats.tweets);
        println!(
            "{:<22}{:>8} ({}%)",
            "Contributor tokens",
            stats.contributor_tokens,
            pct(stats.contributor_share)
        );
        println!(
            "{:<22}{:>8} ({}%)",
            "Musical Work tokens",
            stats.musical_work_tokens,
            pct(stats.musical_work_share)
        );
        println!("{:<22}{:>8}", "Total tokens", stats.total_tokens);
    }

    let mut info = RunInfo::new("stats");
    info.flag("input", args.input.display().to_string());
    info.flag("json", args.json);
    info.input("input", &args.input);
    Ok(info)
}

fn gazetteer_inputs(info: &mut RunInfo, source: &util::GazetteerSource) {
    if let util::GazetteerSource::Flag(dir) | util::GazetteerSource::Env(dir) = source {
        for kind in crate::features::GazetteerKind::ALL {
            info.input_named(
                format!("gazetteers/{}", kind.name()),
                dir.join(format!("{}.txt", kind.name())),
            );
        }
    }
}

fn cmd_train(args: &TrainArgs) -> Result<RunInfo> {
    let mut corpus = read_corpus(&args.train)?;
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    for tweet in &mut corpus {
        fill_missing_pos_chunk(tweet);
    }
    let (gazetteers, source) = resolve_gazetteers(args.gazetteers.as_deref())?;
    let entry_count: usize = gazetteers.iter().map(|g| g.len()).sum();
    eprintln!("gazetteers: {} entries from {}", entry_count, source.describe());
    let config = TrainConfig {
        epochs: args.epochs,
        seed: args.seed,
        decoder: args.decoder,
        shuffle: !args.no_shuffle,
        average: !args.no_average,
    };
    let model = train(&corpus, &gazetteers, &config)?;
    model.save(&args.model_out)?;
    eprintln!(
        "trained on {} tweets, {} epochs -> {} ({} features)",
        corpus.len(),
        args.epochs,
        args.model_out.display(),
        model.n_features()
    );

    let mut info = RunInfo::new("train");
    info.flag("train", args.train.display().to_string());
    info.flag("gazetteers", source.describe());
    info.flag("epochs", args.epochs);
    info.flag("seed", args.seed);
    info.flag("decoder", args.decoder.as_str());
    info.flag("shuffle", !args.no_shuffle);
    info.flag("average", !args.no_average);
    info.flag("model_out", args.model_out.display().to_string());
    info.input("train", &args.train);
    gazetteer_inputs(&mut info, &source);
    Ok(info)
}

fn cmd_tag(args: &TagArgs, jobs: usize) -> Result<RunInfo> {
    let model = LinearModel::load(&args.model)?;
    let mut corpus = read_corpus(&args.input)?;
    for tweet in &mut corpus {
        fill_missing_pos_chunk(tweet);
    }
    let (gazetteers, source) = resolve_gazetteers(args.gazetteers.as_deref())?;
    let labeled: Vec<TaggedTweet> = parallel_map(&corpus, jobs, |tweet| {
        tweet_features(tweet, &gazetteers)
            .map(|fvs| tweet.clone().with_labels(model.decode(args.decoder, &fvs)))
    })
    .into_iter()
    .collect::<Result<_>>()?;
    write_corpus(&args.output, &labeled)?;
    eprintln!("tagged {} tweets -> {}", labeled.len(), args.output.display());

    let mut info = RunInfo::new("tag");
    info.flag("model", args.model.display().to_string());
    info.flag("input", args.input.display().to_string());
    info.flag("gazetteers", source.describe());
    info.flag("decoder", args.decoder.as_str());
    info.flag("output", args.output.display().to_string());
    info.input("model", &args.model);
    info.input("input", &args.input);
    gazetteer_inputs(&mut info, &source);
    Ok(info)
}

fn cmd_match(args: &MatchArgs, jobs: usize) -> Result<RunInfo> {
    let (schedule, skipped) = read_schedule_jsonl(&args.schedule)?;
    if skipped > 0 {
        eprintln!("schedule: {skipped} lines skipped");
    }
    let corpus = read_corpus(&args.input)?;
    let config = MatchConfig {
        window_secs: args.t,
        work_threshold: args.w,
        contributor_threshold: args.c,
        alpha: args.alpha,
        stopwords: resolve_stopwords(args.stopwords.as_deref())?,
    };
    config.validate()?;
    let outcomes: Vec<MatchOutcome> = parallel_map(&corpus, jobs, |tweet| {
        match_tweet(tweet, &schedule, &config)
    })
    .into_iter()
    .collect::<Result<_>>()?;

    let mut labeled = Vec::with_capacity(corpus.len());
    for (tweet, outcome) in corpus.iter().zip(&outcomes) {
        let labels = corpus::iob_from_spans(&outcome.spans, tweet.tokens.len())?;
        labeled.push(tweet.clone().with_labels(labels));
    }
    write_corpus(&args.output, &labeled)?;
    if let Some(diag_path) = &args.diagnostics {
        let mut file =
            std::fs::File::create(diag_path).map_err(|e| Error::io(diag_path, e))?;
        for (tweet, outcome) in corpus.iter().zip(&outcomes) {
            let record = json!({
                "id": tweet.id,
                "ts": tweet.timestamp.map(corpus::format_timestamp),
                "candidates": outcome.candidates,
                "spans": outcome.spans,
            });
            writeln!(file, "{record}").map_err(|e| Error::io(diag_path, e))?;
        }
    }
    let n_spans: usize = outcomes.iter().map(|o| o.spans.len()).sum();
    eprintln!(
        "matched {} tweets against {} schedule entries: {} spans -> {}",
        corpus.len(),
        schedule.len(),
        n_spans,
        args.output.display()
    );

    let mut info = RunInfo::new("match");
    info.flag("schedule", args.schedule.display().to_string());
    info.flag("input", args.input.display().to_string());
    info.flag("t", args.t);
    info.flag("w", args.w);
    info.flag("c", args.c);
    info.flag("alpha", args.alpha);
    info.flag(
        "stopwords",
        args.stopwords
            .as_ref()
            .map_or("<bundled>".to_string(), |p| p.display().to_string()),
    );
    info.flag("output", args.output.display().to_string());
    info.input("schedule", &args.schedule);
    info.input("input", &args.input);
    if let Some(p) = &args.stopwords {
        info.input("stopwords", p);
    }
    Ok(info)
}

fn cmd_reconcile(args: &ReconcileArgs) -> Result<RunInfo> {
    let model_pred = read_corpus(&args.model_pred)?;
    let schedule_pred = read_corpus(&args.schedule_pred)?;
    let merged = reconcile_corpora(&model_pred, &schedule_pred, args.granularity)?;
    write_corpus(&args.output, &merged)?;
    eprintln!("reconciled {} tweets -> {}", merged.len(), args.output.display());

    let mut info = RunInfo::new("reconcile");
    info.flag("model_pred", args.model_pred.display().to_string());
    info.flag("schedule_pred", args.schedule_pred.display().to_string());
    info.flag("granularity", args.granularity.as_str());
    info.flag("output", args.output.display().to_string());
    info.input("model_pred", &args.model_pred);
    info.input("schedule_pred", &args.schedule_pred);
    Ok(info)
}

fn type_report_json(report: &TypeReport) -> serde_json::Value {
    json!({
        "tp": report.true_positives,
        "fp": report.false_positives,
        "fn": report.false_negatives,
        "precision": report.precision * 100.0,
        "recall": report.recall * 100.0,
        "f1": report.f1 * 100.0,
    })
}

fn eval_report_json(report: &EvalReport) -> serde_json::Value {
    json!({
        "contributor": type_report_json(&report.contributor),
        "musical_work": type_report_json(&report.musical_work),
        "overall": type_report_json(&report.overall),
    })
}

fn print_eval_table(report: &EvalReport) {
    println!("{:<14}{:>8}{:>8}{:>8}", "", "P", "R", "F1");
    for (name, row) in [
        ("Contributor", &report.contributor),
        ("Musical Work", &report.musical_work),
        ("Overall", &report.overall),
    ] {
        println!(
            "{:<14}{:>8}{:>8}{:>8}",
            name,
            pct(row.precision),
            pct(row.recall),
            pct(row.f1)
        );
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<RunInfo> {
    let gold = read_corpus(&args.gold)?;
    let pred = read_corpus(&args.pred)?;
    let report = evaluate(&gold, &pred)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&eval_report_json(&report)).unwrap()
        );
    } else {
        print_eval_table(&report);
    }

    let mut info = RunInfo::new("eval");
    info.flag("gold", args.gold.display().to_string());
    info.flag("pred", args.pred.display().to_string());
    info.flag("json", args.json);
    info.input("gold", &args.gold);
    info.input("pred", &args.pred);
    Ok(info)
}

fn print_sweep_table(rows: &[SweepRow]) {
    println!(
        "{:>6}{:>6}{:>6}{:>9}{:>8}{:>8}{:>9}{:>8}{:>8}",
        "t", "w", "c", "C-P", "C-R", "C-F1", "MW-P", "MW-R", "MW-F1"
    );
    for row in rows {
        let c = &row.report.contributor;
        let mw = &row.report.musical_work;
        println!(
            "{:>6}{:>6}{:>6}{:>9}{:>8}{:>8}{:>9}{:>8}{:>8}",
            row.t,
            row.w,
            row.c,
            pct(c.precision),
            pct(c.recall),
            pct(c.f1),
            pct(mw.precision),
            pct(mw.recall),
            pct(mw.f1)
        );
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<RunInfo> {
    let (schedule, skipped) = read_schedule_jsonl(&args.schedule)?;
    if skipped > 0 {
        eprintln!("schedule: {skipped} lines skipped");
    }
    let gold = read_corpus(&args.gold)?;
    let stopwords = resolve_stopwords(args.stopwords.as_deref())?;
    let rows = sweep(&gold, &schedule, &args.t, &args.w, &args.c, args.alpha, &stopwords)?;
    if args.json {
        let value: Vec<serde_json::Value> = rows
            .iter()
            .map(|row| {
                json!({
                    "t": row.t,
                    "w": row.w,
                    "c": row.c,
                    "report": eval_report_json(&row.report),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        print_sweep_table(&rows);
    }

    let mut info = RunInfo::new("sweep");
    info.flag("schedule", args.schedule.display().to_string());
    info.flag("gold", args.gold.display().to_string());
    info.flag("t", &args.t);
    info.flag("w", &args.w);
    info.flag("c", &args.c);
    info.flag("alpha", args.alpha);
    info.flag("json", args.json);
    info.input("schedule", &args.schedule);
    info.input("gold", &args.gold);
    Ok(info)
}

fn cmd_wilcoxon(args: &WilcoxonArgs) -> Result<RunInfo> {
    let result = wilcoxon_rank_sum_with(&args.a, &args.b, args.method)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&result).unwrap());
    } else {
        println!(
            "W = {}  p (two-sided) = {:.4}  [{}]",
            result.statistic,
            result.p_two_sided,
            if result.exact { "exact" } else { "normal approximation" }
        );
    }

    let mut info = RunInfo::new("wilcoxon");
    info.flag("a", &args.a);
    info.flag("b", &args.b);
    info.flag("method", args.method.as_str());
    info.flag("json", args.json);
    Ok(info)
}
