use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use idbench_core::corpus::{
    corpus_stats, extract_contexts, identifier_sequences, read_corpus_dir, sample_pairs, CorpusRead,
    IdentifierCounts, SamplingConfig,
};
use idbench_core::embeddings::train::{read_corpus, train, Mode, TrainConfig};
use idbench_core::embeddings::{
    load_ngram_vectors_inferred, load_vectors, write_ngram_vectors, write_vectors, EmbeddingStore,
};
use idbench_core::ensemble::{leave_one_out, training_set, Dictionary, EnsembleModel, LooResult, SvrParams, REPRESENTATIONS};
use idbench_core::evaluator::{
    evaluate, parse_scores_csv, parse_tags_csv, write_scores_csv, EvaluationReport, ScoreMatrix,
};
use idbench_core::model::{
    format_score, parse_benchmark_csv, parse_direct_ratings, parse_indirect_ratings, parse_pairs_csv,
    read_contexts_jsonl, write_benchmark_csv, write_contexts_jsonl, write_pairs_csv, Benchmark,
};
use idbench_core::pipeline::{build_benchmark, CleaningConfig};
use idbench_core::strdist::{lexical_similarity, LexicalKind};
use idbench_core::survey::{SurveyPool, SurveyStore};
use idbench_core::{Identifier, Task, Variant};

#[derive(Parser)]
#[command(name = "idbench", version, about = "Identifier semantics benchmarks and evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a benchmark from direct and indirect survey ratings.
    Build(BuildArgs),
    /// Print the lexical similarity of two identifiers.
    Strdist {
        #[arg(long, value_parser = parse_lexical)]
        kind: LexicalKind,
        id1: String,
        id2: String,
    },
    /// Train word embeddings on a tokenized corpus.
    Train(TrainArgs),
    /// Nearest neighbours of a token.
    Knn {
        #[arg(long)]
        vectors: PathBuf,
        #[arg(long)]
        token: String,
        #[arg(short = 'k', default_value_t = 10)]
        k: usize,
    },
    /// Mine a JavaScript corpus.
    Mine {
        #[command(subcommand)]
        command: MineCommand,
    },
    /// Score identifier pairs with a lexical measure or word vectors.
    Score(ScoreArgs),
    /// Evaluate score files against a benchmark.
    Eval(EvalArgs),
    /// Fit the ensemble combiner, optionally with leave-one-out evaluation.
    Ensemble(EnsembleArgs),
    /// Run the survey HTTP service.
    Serve(ServeArgs),
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    direct: PathBuf,
    #[arg(long)]
    indirect: PathBuf,
    /// Participant deviation threshold.
    #[arg(long, requires = "theta", conflicts_with = "variant")]
    tau: Option<f64>,
    /// Pair direct/contextual gap threshold.
    #[arg(long, requires = "tau", conflicts_with = "variant")]
    theta: Option<f64>,
    /// Named thresholds instead of --tau/--theta.
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    #[arg(long, default_value_t = CleaningConfig::DEFAULT_DOWNER_GAIN)]
    downer_gain: f64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Small,
    Medium,
    Large,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Small => Variant::Small,
            VariantArg::Medium => Variant::Medium,
            VariantArg::Large => Variant::Large,
        }
    }
}

#[derive(Args)]
struct TrainArgs {
    /// Whitespace-tokenized text, one sequence per line.
    #[arg(long)]
    corpus: PathBuf,
    #[arg(long, value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, default_value_t = 100)]
    dim: usize,
    #[arg(long, default_value_t = 5)]
    window: usize,
    #[arg(long, default_value_t = 5)]
    neg: usize,
    #[arg(long, default_value_t = 5)]
    epochs: usize,
    #[arg(long, default_value_t = 5)]
    min_count: usize,
    /// Initial learning rate (default 0.05 for cbow, 0.025 for sg).
    #[arg(long)]
    lr: Option<f64>,
    /// Character n-gram range, e.g. 3,6.
    #[arg(long, value_parser = parse_range)]
    subword: Option<(usize, usize)>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Word vectors; n-gram vectors go to `<out>.ngrams`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Subcommand)]
enum MineCommand {
    /// Occurrence statistics (JSON).
    Stats {
        #[arg(long)]
        corpus: PathBuf,
        /// Benchmark CSV whose identifiers are reported; defaults to all.
        #[arg(long)]
        bench: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample candidate pairs for the survey (pairs CSV).
    Sample {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        vectors: PathBuf,
        /// Sampling configuration (JSON); defaults apply to absent fields.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        min_count: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Blanked code contexts for the identifiers of a pairs file (JSONL).
    Contexts {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Identifier token sequences, one file per line, for `train`.
    Tokens {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct ScoreArgs {
    /// Pairs CSV with `id1,id2` columns (a benchmark CSV works too).
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long, value_parser = parse_lexical, conflicts_with = "vectors", required_unless_present = "vectors")]
    kind: Option<LexicalKind>,
    #[arg(long)]
    vectors: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    bench: PathBuf,
    /// Comma-separated score files; each file's stem names its column.
    #[arg(long, value_delimiter = ',', required = true)]
    scores: Vec<PathBuf>,
    #[arg(long)]
    tags: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct EnsembleArgs {
    #[arg(long)]
    bench: PathBuf,
    /// Directory with one `<representation>.csv` score file per column.
    #[arg(long)]
    scores_dir: PathBuf,
    /// Word list, one lowercase word per line.
    #[arg(long)]
    dict: PathBuf,
    #[arg(long, value_parser = parse_task)]
    task: Task,
    #[arg(long)]
    loo: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long)]
    contexts: PathBuf,
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    /// Directory for the per-session event logs.
    #[arg(long)]
    data: PathBuf,
}

fn parse_lexical(s: &str) -> Result<LexicalKind, String> {
    s.parse().map_err(|e: idbench_core::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: idbench_core::Error| e.to_string())
}

fn parse_task(s: &str) -> Result<Task, String> {
    s.parse().map_err(|e: idbench_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected MIN,MAX")?;
    let a = a.trim().parse().map_err(|_| format!("bad MIN {a:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad MAX {b:?}"))?;
    Ok((a, b))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    Ok(BufReader::new(
        File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
    ))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    Ok(BufWriter::new(
        File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
    ))
}

fn ngram_sidecar(vectors: &Path) -> PathBuf {
    let mut s = vectors.as_os_str().to_owned();
    s.push(".ngrams");
    PathBuf::from(s)
}

/// Word vectors plus their `.ngrams` sidecar when present.
fn load_store(path: &Path) -> Result<EmbeddingStore> {
    let mut store = load_vectors(open(path)?).with_context(|| format!("reading {}", path.display()))?;
    let side = ngram_sidecar(path);
    if side.exists() {
        load_ngram_vectors_inferred(&mut store, open(&side)?)
            .with_context(|| format!("reading {}", side.display()))?;
    }
    Ok(store)
}

fn load_bench(path: &Path) -> Result<Benchmark> {
    parse_benchmark_csv(open(path)?).with_context(|| format!("reading {}", path.display()))
}

fn read_corpus_reported(dir: &Path) -> Result<CorpusRead> {
    let read = read_corpus_dir(dir)?;
    for (path, why) in &read.skipped {
        eprintln!("warning: skipped {}: {why}", path.display());
    }
    Ok(read)
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Build(a) => build(a),
        Command::Strdist { kind, id1, id2 } => {
            println!("{}", format_score(lexical_similarity(&id1, &id2, kind)?));
            Ok(())
        }
        Command::Train(a) => train_cmd(a),
        Command::Knn { vectors, token, k } => {
            let store = load_store(&vectors)?;
            for (t, s) in store.nearest_neighbors(&token, k)? {
                println!("{t}\t{}", format_score(s));
            }
            Ok(())
        }
        Command::Mine { command } => mine(command),
        Command::Score(a) => score(a),
        Command::Eval(a) => eval(a),
        Command::Ensemble(a) => ensemble(a),
        Command::Serve(a) => serve(a),
    }
}

fn build(a: BuildArgs) -> Result<()> {
    let mut cfg = match (a.variant, a.tau, a.theta) {
        (Some(v), _, _) => CleaningConfig::for_variant(v.into()),
        (None, Some(tau), Some(theta)) => CleaningConfig::new(tau, theta, a.downer_gain)?,
        _ => bail!("give either --variant or both --tau and --theta"),
    };
    cfg.downer_gain = a.downer_gain;
    let direct = parse_direct_ratings(open(&a.direct)?).with_context(|| format!("reading {}", a.direct.display()))?;
    let indirect =
        parse_indirect_ratings(open(&a.indirect)?).with_context(|| format!("reading {}", a.indirect.display()))?;
    let (bench, report) = build_benchmark(&direct, &indirect, &cfg)?;

    fs::create_dir_all(&a.out)?;
    let mut w = create(&a.out.join("benchmark.csv"))?;
    write_benchmark_csv(&bench, &mut w)?;
    w.flush()?;
    for task in Task::ALL {
        let (pairs, scores): (Vec<_>, Vec<_>) =
            bench.task_pairs(task).map(|(p, s)| (p.clone(), Some(s))).unzip();
        let mut w = create(&a.out.join(format!("{}.csv", task.as_str())))?;
        write_scores_csv(&pairs, &scores, &mut w)?;
        w.flush()?;
    }
    let mut w = create(&a.out.join("agreement.json"))?;
    serde_json::to_writer_pretty(&mut w, &report)?;
    writeln!(w)?;
    w.flush()?;
    println!(
        "{} pairs ({} contextual); removed {} outlier and {} downer participants, {} pairs; alpha rel {:.3} sim {:.3}",
        bench.len(),
        report.pairs_contextual,
        report.participants_removed_outlier,
        report.participants_removed_downer,
        report.pairs_removed,
        report.ira_relatedness,
        report.ira_similarity
    );
    Ok(())
}

fn train_cmd(a: TrainArgs) -> Result<()> {
    let corpus = read_corpus(open(&a.corpus)?)?;
    let mut cfg = TrainConfig::new(a.mode);
    cfg.dim = a.dim;
    cfg.window = a.window;
    cfg.negatives = a.neg;
    cfg.epochs = a.epochs;
    cfg.min_count = a.min_count;
    cfg.subword = a.subword;
    cfg.seed = a.seed;
    if let Some(lr) = a.lr {
        cfg.learning_rate = lr;
    }
    let store = train(&corpus, &cfg)?;
    let mut w = create(&a.out)?;
    write_vectors(&store, &mut w)?;
    w.flush()?;
    if store.has_ngrams() {
        let mut w = create(&ngram_sidecar(&a.out))?;
        write_ngram_vectors(&store, &mut w)?;
        w.flush()?;
    }
    eprintln!("{} tokens x {} dims", store.len(), store.dim());
    Ok(())
}

fn mine(cmd: MineCommand) -> Result<()> {
    match cmd {
        MineCommand::Stats { corpus, bench, out } => {
            let read = read_corpus_reported(&corpus)?;
            let mut counts = IdentifierCounts::from_files(&read.files);
            counts.skipped = read.skipped.len();
            let ids: BTreeSet<String> = match bench {
                Some(b) => load_bench(&b)?
                    .scores
                    .iter()
                    .flat_map(|g| [g.pair.id1.to_string(), g.pair.id2.to_string()])
                    .collect(),
                None => counts.by_identifier.keys().cloned().collect(),
            };
            let stats = corpus_stats(&counts, &ids);
            let mut w = create(&out)?;
            serde_json::to_writer_pretty(&mut w, &stats)?;
            writeln!(w)?;
            w.flush()?;
            eprintln!(
                "{} files, {} occurrences, coverage {:.4}",
                stats.files, stats.total_occurrences, stats.coverage
            );
        }
        MineCommand::Sample {
            corpus,
            vectors,
            config,
            min_count,
            seed,
            out,
        } => {
            let mut cfg: SamplingConfig = match config {
                Some(p) => serde_json::from_reader(open(&p)?).with_context(|| format!("reading {}", p.display()))?,
                None => SamplingConfig::default(),
            };
            if let Some(m) = min_count {
                cfg.min_count = m;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let read = read_corpus_reported(&corpus)?;
            let counts = IdentifierCounts::from_files(&read.files);
            let store = load_store(&vectors)?;
            let pairs = sample_pairs(&counts, &store, &cfg)?;
            let mut w = create(&out)?;
            write_pairs_csv(&pairs, &mut w)?;
            w.flush()?;
            eprintln!("{} pairs", pairs.len());
        }
        MineCommand::Contexts {
            corpus,
            pairs,
            n,
            seed,
            out,
        } => {
            let read = read_corpus_reported(&corpus)?;
            let pairs = parse_pairs_csv(open(&pairs)?)?;
            let ids: BTreeSet<&Identifier> = pairs.iter().flat_map(|p| [&p.id1, &p.id2]).collect();
            let mut all = Vec::new();
            for (i, id) in ids.into_iter().enumerate() {
                let sample = extract_contexts(&read.files, id, n, seed.wrapping_add(i as u64))?;
                if sample.is_short() {
                    eprintln!(
                        "warning: {id}: {} of {} contexts available",
                        sample.contexts.len(),
                        sample.requested
                    );
                }
                all.extend(sample.contexts);
            }
            let mut w = create(&out)?;
            write_contexts_jsonl(&all, &mut w)?;
            w.flush()?;
            eprintln!("{} contexts", all.len());
        }
        MineCommand::Tokens { corpus, out } => {
            let read = read_corpus_reported(&corpus)?;
            let mut w = create(&out)?;
            let seqs = identifier_sequences(&read.files);
            for s in &seqs {
                writeln!(w, "{}", s.join(" "))?;
            }
            w.flush()?;
            eprintln!("{} sequences", seqs.len());
        }
    }
    Ok(())
}

fn score(a: ScoreArgs) -> Result<()> {
    let pairs = parse_pairs_csv(open(&a.pairs)?).with_context(|| format!("reading {}", a.pairs.display()))?;
    let scores: Vec<Option<f64>> = match (a.kind, &a.vectors) {
        (Some(kind), _) => pairs
            .iter()
            .map(|p| lexical_similarity(p.id1.as_str(), p.id2.as_str(), kind).ok())
            .collect(),
        (None, Some(v)) => load_store(v)?.score_pairs(&pairs),
        (None, None) => bail!("give --kind or --vectors"),
    };
    let missing = scores.iter().filter(|s| s.is_none()).count();
    if missing > 0 {
        eprintln!("warning: {missing} of {} pairs could not be scored", pairs.len());
    }
    let mut w = create(&a.out)?;
    write_scores_csv(&pairs, &scores, &mut w)?;
    w.flush()?;
    Ok(())
}

fn column_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn eval(a: EvalArgs) -> Result<()> {
    let bench = load_bench(&a.bench)?;
    let mut matrix = ScoreMatrix::for_benchmark(&bench);
    for path in &a.scores {
        let rows = parse_scores_csv(open(path)?).with_context(|| format!("reading {}", path.display()))?;
        matrix.add_keyed_column(column_name(path), &rows)?;
    }
    let tags = match &a.tags {
        Some(p) => parse_tags_csv(open(p)?).with_context(|| format!("reading {}", p.display()))?,
        None => Vec::new(),
    };
    let report = EvaluationReport::build(&matrix, &bench, &tags);
    let mut w = create(&a.out)?;
    report.write_json(&mut w)?;
    writeln!(w)?;
    w.flush()?;
    print!("{}", report.to_table());
    Ok(())
}

#[derive(serde::Serialize)]
struct EnsembleOutput<'a> {
    task: Task,
    model: &'a EnsembleModel,
    loo: Option<&'a LooResult>,
}

fn ensemble(a: EnsembleArgs) -> Result<()> {
    let bench = load_bench(&a.bench)?;
    let dict = Dictionary::read(open(&a.dict)?)?;
    let mut matrix = ScoreMatrix::for_benchmark(&bench);
    for name in REPRESENTATIONS {
        let path = a.scores_dir.join(format!("{name}.csv"));
        if !path.exists() {
            eprintln!("warning: no {}; column {name} treated as missing", path.display());
            continue;
        }
        let rows = parse_scores_csv(open(&path)?).with_context(|| format!("reading {}", path.display()))?;
        matrix.add_keyed_column(name, &rows)?;
    }
    let (rows, targets) = training_set(&matrix, &bench, a.task, &dict)?;
    let params = SvrParams::default();
    let model = EnsembleModel::fit(&rows, &targets, params)?;
    if !model.regressor.converged {
        eprintln!("warning: solver stopped at the iteration cap");
    }
    let loo = if a.loo {
        let r = leave_one_out(&rows, &targets, params)?;
        println!("ensemble\t{}", format_score(r.correlation));
        for col in &matrix.columns {
            match evaluate(&matrix.pairs, &col.scores, &bench, a.task) {
                Ok(e) => println!("{}\t{}", col.name, format_score(e.correlation)),
                Err(e) => println!("{}\t- ({e})", col.name),
            }
        }
        Some(r)
    } else {
        None
    };
    let mut w = create(&a.out)?;
    serde_json::to_writer_pretty(
        &mut w,
        &EnsembleOutput {
            task: a.task,
            model: &model,
            loo: loo.as_ref(),
        },
    )?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn serve(a: ServeArgs) -> Result<()> {
    let pairs = parse_pairs_csv(open(&a.pairs)?).with_context(|| format!("reading {}", a.pairs.display()))?;
    let contexts = read_contexts_jsonl(open(&a.contexts)?).with_context(|| format!("reading {}", a.contexts.display()))?;
    let seed = idbench_server::seed_from_env().map_err(anyhow::Error::msg)?;
    let store = SurveyStore::open(SurveyPool::new(pairs, contexts)?, &a.data, seed)?;
    let addr: SocketAddr = format!("{}:{}", a.host, a.port)
        .parse()
        .with_context(|| format!("bad address {}:{}", a.host, a.port))?;
    eprintln!("listening on http://{addr}");
    tokio::runtime::Runtime::new()?.block_on(idbench_server::serve(store, addr))?;
    Ok(())
}
