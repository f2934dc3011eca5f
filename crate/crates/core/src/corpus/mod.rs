//! Mining a JavaScript corpus: identifier statistics, candidate pair
//! sampling and code contexts for the surveys.

pub mod lexer;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::{Path, PathBuf};

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use lexer::{lex_identifiers, Occurrence, Role};

use crate::embeddings::{cosine, EmbeddingStore};
use crate::error::{Error, Result};
use crate::model::{
    is_identifier_part, BlankSlot, CodeContext, Identifier, IdentifierPair, PairId, CONTEXT_LINES,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceFile {
    pub path: String,
    pub text: String,
}

impl SourceFile {
    pub fn new(path: impl Into<String>, text: impl Into<String>) -> Self {
        SourceFile {
            path: path.into(),
            text: text.into(),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CorpusRead {
    pub files: Vec<SourceFile>,
    /// Files that could not be read, with the reason.
    pub skipped: Vec<(PathBuf, String)>,
}

/// Reads every `*.js` file below `dir`, in path order. Unreadable or
/// non-UTF-8 files are skipped and reported.
pub fn read_corpus_dir(dir: &Path) -> Result<CorpusRead> {
    if !dir.is_dir() {
        return Err(Error::Config(format!("{} is not a directory", dir.display())));
    }
    let mut read = CorpusRead::default();
    for entry in walkdir::WalkDir::new(dir).sort_by_file_name() {
        let entry = match entry {
            Ok(e) => e,
            Err(e) => {
                let path = e.path().map(Path::to_path_buf).unwrap_or_default();
                read.skipped.push((path, e.to_string()));
                continue;
            }
        };
        let path = entry.path();
        if !entry.file_type().is_file() || path.extension().and_then(|e| e.to_str()) != Some("js") {
            continue;
        }
        match std::fs::read_to_string(path) {
            Ok(text) => {
                let rel = path.strip_prefix(dir).unwrap_or(path);
                read.files.push(SourceFile::new(rel.to_string_lossy(), text));
            }
            Err(e) => read.skipped.push((path.to_path_buf(), e.to_string())),
        }
    }
    Ok(read)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimaryRole {
    Function,
    Variable,
    Property,
    Other,
    Mixed,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleCounts {
    pub function: u64,
    pub variable: u64,
    pub property: u64,
    pub other: u64,
}

impl RoleCounts {
    pub fn get(&self, role: Role) -> u64 {
        match role {
            Role::Function => self.function,
            Role::Variable => self.variable,
            Role::Property => self.property,
            Role::Other => self.other,
        }
    }

    fn bump(&mut self, role: Role) {
        match role {
            Role::Function => self.function += 1,
            Role::Variable => self.variable += 1,
            Role::Property => self.property += 1,
            Role::Other => self.other += 1,
        }
    }

    fn merge(&mut self, o: &RoleCounts) {
        self.function += o.function;
        self.variable += o.variable;
        self.property += o.property;
        self.other += o.other;
    }

    pub fn total(&self) -> u64 {
        self.function + self.variable + self.property + self.other
    }

    /// The role of strictly more than half of the occurrences, if any.
    pub fn primary(&self) -> PrimaryRole {
        let total = self.total();
        for role in Role::ALL {
            if 2 * self.get(role) > total {
                return match role {
                    Role::Function => PrimaryRole::Function,
                    Role::Variable => PrimaryRole::Variable,
                    Role::Property => PrimaryRole::Property,
                    Role::Other => PrimaryRole::Other,
                };
            }
        }
        PrimaryRole::Mixed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierStats {
    pub identifier: String,
    pub count: u64,
    pub role_counts: RoleCounts,
    pub primary_role: PrimaryRole,
}

/// Identifier counts over a corpus. Merging is associative and commutative,
/// so files can be counted independently and combined in any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentifierCounts {
    pub files: usize,
    pub skipped: usize,
    pub total: u64,
    pub by_identifier: BTreeMap<String, RoleCounts>,
}

impl IdentifierCounts {
    pub fn add_source(&mut self, source: &str) {
        for occ in lex_identifiers(source) {
            self.by_identifier.entry(occ.name).or_default().bump(occ.role);
            self.total += 1;
        }
        self.files += 1;
    }

    pub fn from_files<'a>(files: impl IntoIterator<Item = &'a SourceFile>) -> Self {
        let mut c = IdentifierCounts::default();
        for f in files {
            c.add_source(&f.text);
        }
        c
    }

    pub fn merge(&mut self, other: &IdentifierCounts) {
        self.files += other.files;
        self.skipped += other.skipped;
        self.total += other.total;
        for (id, rc) in &other.by_identifier {
            self.by_identifier.entry(id.clone()).or_default().merge(rc);
        }
    }

    pub fn count(&self, identifier: &str) -> u64 {
        self.by_identifier.get(identifier).map_or(0, RoleCounts::total)
    }

    pub fn stats(&self, identifier: &str) -> IdentifierStats {
        let role_counts = self.by_identifier.get(identifier).cloned().unwrap_or_default();
        IdentifierStats {
            identifier: identifier.to_owned(),
            count: role_counts.total(),
            primary_role: role_counts.primary(),
            role_counts,
        }
    }

    /// Identifiers occurring strictly more than `min_count` times.
    pub fn frequent(&self, min_count: u64) -> Vec<&str> {
        self.by_identifier
            .iter()
            .filter(|(_, rc)| rc.total() > min_count)
            .map(|(id, _)| id.as_str())
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RoleDistribution {
    pub function: f64,
    pub variable: f64,
    pub property: f64,
    pub other: f64,
    pub mixed: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub files: usize,
    pub skipped_files: usize,
    pub total_occurrences: u64,
    pub benchmark_occurrences: u64,
    /// Share of all identifier occurrences that are benchmark identifiers;
    /// 0 with `coverage_defined = false` for an empty corpus.
    pub coverage: f64,
    pub coverage_defined: bool,
    pub min: u64,
    pub mean: f64,
    pub max: u64,
    /// Fraction of benchmark identifiers per primary role.
    pub roles: RoleDistribution,
    pub identifiers: Vec<IdentifierStats>,
}

/// Occurrence statistics of `bench_identifiers` in a counted corpus.
pub fn corpus_stats(counts: &IdentifierCounts, bench_identifiers: &BTreeSet<String>) -> CorpusStats {
    let identifiers: Vec<IdentifierStats> =
        bench_identifiers.iter().map(|id| counts.stats(id)).collect();
    let bench_total: u64 = identifiers.iter().map(|s| s.count).sum();
    let n = identifiers.len();
    let mut roles = RoleDistribution::default();
    for s in &identifiers {
        let slot = match s.primary_role {
            PrimaryRole::Function => &mut roles.function,
            PrimaryRole::Variable => &mut roles.variable,
            PrimaryRole::Property => &mut roles.property,
            PrimaryRole::Other => &mut roles.other,
            PrimaryRole::Mixed => &mut roles.mixed,
        };
        *slot += 1.0;
    }
    if n > 0 {
        for v in [
            &mut roles.function,
            &mut roles.variable,
            &mut roles.property,
            &mut roles.other,
            &mut roles.mixed,
        ] {
            *v /= n as f64;
        }
    }
    CorpusStats {
        files: counts.files,
        skipped_files: counts.skipped,
        total_occurrences: counts.total,
        benchmark_occurrences: bench_total,
        coverage: if counts.total > 0 {
            bench_total as f64 / counts.total as f64
        } else {
            0.0
        },
        coverage_defined: counts.total > 0,
        min: identifiers.iter().map(|s| s.count).min().unwrap_or(0),
        mean: if n > 0 { bench_total as f64 / n as f64 } else { 0.0 },
        max: identifiers.iter().map(|s| s.count).max().unwrap_or(0),
        roles,
        identifiers,
    }
}

/// A cosine-similarity interval `[lo, hi)` (closed at 1.0) and the number
/// of pairs to draw from it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Band {
    pub lo: f64,
    pub hi: f64,
    pub quota: usize,
}

impl Band {
    pub fn contains(&self, c: f64) -> bool {
        c >= self.lo && (c < self.hi || (self.hi >= 1.0 && c <= self.hi))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SamplingConfig {
    pub min_count: u64,
    pub bands: Vec<Band>,
    pub manual_pairs: Vec<IdentifierPair>,
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            min_count: 50,
            bands: Vec::new(),
            manual_pairs: Vec::new(),
            random_pairs: 0,
            seed: 0,
        }
    }
}

impl SamplingConfig {
    pub fn validate(&self) -> Result<()> {
        let mut bands = self.bands.clone();
        bands.sort_by(|a, b| a.lo.total_cmp(&b.lo));
        for b in &bands {
            if !(b.lo >= -1.0 && b.lo < b.hi && b.hi <= 1.0) {
                return Err(Error::Config(format!(
                    "band [{}, {}) must be non-empty within [-1, 1]",
                    b.lo, b.hi
                )));
            }
        }
        if bands.windows(2).any(|w| w[0].hi > w[1].lo) {
            return Err(Error::Config("bands overlap".into()));
        }
        Ok(())
    }
}

/// A scored candidate pair.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedPair {
    pub pair: IdentifierPair,
    pub cosine: f64,
}

/// All unordered pairs of frequent, resolvable identifiers, ranked by
/// descending cosine (ties by key).
pub fn rank_pairs(counts: &IdentifierCounts, store: &EmbeddingStore, min_count: u64) -> Vec<RankedPair> {
    let vectors: Vec<(Identifier, Vec<f64>)> = counts
        .frequent(min_count)
        .into_iter()
        .filter_map(|id| {
            let ident = Identifier::new(id).ok()?;
            let v = store.vector_for(id).ok()?;
            Some((ident, v))
        })
        .collect();
    let mut out = Vec::new();
    for (i, (a, va)) in vectors.iter().enumerate() {
        for (b, vb) in &vectors[i + 1..] {
            if let Ok(c) = cosine(va, vb) {
                let pair = IdentifierPair::new(a.clone(), b.clone()).expect("distinct identifiers");
                out.push(RankedPair { pair, cosine: c });
            }
        }
    }
    out.sort_by(|x, y| {
        y.cosine
            .total_cmp(&x.cosine)
            .then_with(|| x.pair.pair_id.cmp(&y.pair.pair_id))
    });
    out
}

/// Draws survey pairs: per-band quotas from the cosine ranking, then the
/// manual pairs, then uniformly random candidate pairs; duplicates dropped.
pub fn sample_pairs(
    counts: &IdentifierCounts,
    store: &EmbeddingStore,
    cfg: &SamplingConfig,
) -> Result<Vec<IdentifierPair>> {
    cfg.validate()?;
    let ranked = rank_pairs(counts, store, cfg.min_count);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut seen: HashSet<PairId> = HashSet::new();
    let mut out = Vec::new();

    for band in &cfg.bands {
        let members: Vec<&RankedPair> = ranked.iter().filter(|r| band.contains(r.cosine)).collect();
        if band.quota > members.len() {
            return Err(Error::Sampling(format!(
                "band [{}, {}) holds {} pairs, quota is {}",
                band.lo,
                band.hi,
                members.len(),
                band.quota
            )));
        }
        let mut picks = index::sample(&mut rng, members.len(), band.quota).into_vec();
        picks.sort_unstable();
        for i in picks {
            let p = &members[i].pair;
            if seen.insert(p.pair_id.clone()) {
                out.push(p.clone());
            }
        }
    }
    for p in &cfg.manual_pairs {
        let key = PairId::canonical(&p.id1, &p.id2);
        if seen.insert(key) {
            out.push(p.clone());
        }
    }
    if cfg.random_pairs > 0 {
        let mut rest: Vec<&RankedPair> = ranked
            .iter()
            .filter(|r| !seen.contains(&r.pair.pair_id))
            .collect();
        if rest.len() < cfg.random_pairs {
            return Err(Error::Sampling(format!(
                "{} random pairs requested, {} candidates left",
                cfg.random_pairs,
                rest.len()
            )));
        }
        rest.shuffle(&mut rng);
        for r in rest.into_iter().take(cfg.random_pairs) {
            seen.insert(r.pair.pair_id.clone());
            out.push(r.pair.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContextSample {
    pub contexts: Vec<CodeContext>,
    pub requested: usize,
    /// Distinct windows that were available.
    pub available: usize,
}

impl ContextSample {
    pub fn is_short(&self) -> bool {
        self.contexts.len() < self.requested
    }
}

/// First line of the 5-line window around `line`: two lines above and two
/// below, shifted inward at file edges.
fn window_start(line: usize, n_lines: usize) -> usize {
    let start = line.saturating_sub(2);
    if n_lines >= CONTEXT_LINES {
        start.min(n_lines - CONTEXT_LINES)
    } else {
        0
    }
}

/// Byte positions of whole-word occurrences of `word` in `line`.
pub(crate) fn word_positions(line: &str, word: &str) -> Vec<usize> {
    let bytes = line.as_bytes();
    let is_part = |b: u8| (b as char).is_ascii() && is_identifier_part(b as char) || b >= 0x80;
    line.match_indices(word)
        .map(|(i, _)| i)
        .filter(|&i| {
            let before = i == 0 || !is_part(bytes[i - 1]);
            let end = i + word.len();
            let after = end >= bytes.len() || !is_part(bytes[end]);
            before && after
        })
        .collect()
}

/// Samples up to `n_contexts` distinct 5-line windows around occurrences of
/// `identifier` and blanks every whole-word occurrence inside each window.
pub fn extract_contexts(
    files: &[SourceFile],
    identifier: &Identifier,
    n_contexts: usize,
    seed: u64,
) -> Result<ContextSample> {
    let mut windows: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (fi, f) in files.iter().enumerate() {
        let n_lines = f.text.split('\n').count();
        for occ in lex_identifiers(&f.text) {
            if occ.name == identifier.as_str() {
                windows.insert((fi, window_start(occ.line, n_lines)));
            }
        }
    }
    let windows: Vec<(usize, usize)> = windows.into_iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let take = n_contexts.min(windows.len());
    let mut picks = index::sample(&mut rng, windows.len(), take).into_vec();
    picks.sort_unstable();

    let mut contexts = Vec::with_capacity(take);
    for i in picks {
        let (fi, start) = windows[i];
        let file_lines: Vec<&str> = files[fi].text.split('\n').collect();
        let mut lines: Vec<String> = file_lines
            .iter()
            .skip(start)
            .take(CONTEXT_LINES)
            .map(|s| (*s).to_owned())
            .collect();
        lines.resize(CONTEXT_LINES, String::new());
        let blanks = lines
            .iter()
            .enumerate()
            .flat_map(|(li, l)| {
                word_positions(l, identifier.as_str())
                    .into_iter()
                    .map(move |col| BlankSlot {
                        line: li,
                        col,
                        len: identifier.len(),
                    })
            })
            .collect();
        contexts.push(CodeContext::new(identifier.clone(), lines, blanks)?);
    }
    Ok(ContextSample {
        contexts,
        requested: n_contexts,
        available: windows.len(),
    })
}

/// One line of identifier tokens per file, for embedding training.
pub fn identifier_sequences(files: &[SourceFile]) -> Vec<Vec<String>> {
    files
        .iter()
        .map(|f| lex_identifiers(&f.text).into_iter().map(|o| o.name).collect::<Vec<_>>())
        .filter(|s| !s.is_empty())
        .collect()
}
