//! CBOW and skip-gram training with negative sampling, optionally over
//! character n-gram inputs.
//!
//! Training is single-threaded and fully determined by the seed.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::subword::char_ngrams;
use super::EmbeddingStore;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cbow,
    #[serde(rename = "sg")]
    SkipGram,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cbow" => Ok(Mode::Cbow),
            "sg" | "skipgram" | "skip-gram" => Ok(Mode::SkipGram),
            other => Err(Error::Config(format!("unknown training mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    pub mode: Mode,
    pub dim: usize,
    pub window: usize,
    pub negatives: usize,
    pub epochs: usize,
    pub learning_rate: f64,
    pub min_count: usize,
    pub subword: Option<(usize, usize)>,
    pub seed: u64,
}

impl TrainConfig {
    /// dim 100, window 5, 5 negatives, 5 epochs, min count 5; learning rate
    /// 0.05 for CBOW and 0.025 for skip-gram.
    pub fn new(mode: Mode) -> Self {
        TrainConfig {
            mode,
            dim: 100,
            window: 5,
            negatives: 5,
            epochs: 5,
            learning_rate: match mode {
                Mode::Cbow => 0.05,
                Mode::SkipGram => 0.025,
            },
            min_count: 5,
            subword: None,
            seed: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("dim", self.dim),
            ("window", self.window),
            ("negatives", self.negatives),
            ("epochs", self.epochs),
        ];
        for (name, v) in positive {
            if v == 0 {
                return Err(Error::Config(format!("{name} must be at least 1")));
            }
        }
        if !(self.learning_rate > 0.0) {
            return Err(Error::Config("learning rate must be positive".into()));
        }
        if let Some((lo, hi)) = self.subword {
            if lo == 0 || lo > hi {
                return Err(Error::Config(format!("invalid subword range {lo},{hi}")));
            }
        }
        Ok(())
    }
}

/// The learning rate never decays below this fraction of its initial value.
const MIN_LR_FRACTION: f64 = 1e-4;
const UNIGRAM_POWER: f64 = 0.75;

pub fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Negative log-likelihood of one logistic target: `-log σ(f)` for a
/// positive and `-log σ(-f)` for a negative, where `f = hidden · output`.
fn target_loss(score: f64, label: bool) -> f64 {
    let z = if label { score } else { -score };
    // -log σ(z) = log(1 + e^{-z}), evaluated stably.
    if z > 0.0 {
        (-z).exp().ln_1p()
    } else {
        -z + z.exp().ln_1p()
    }
}

/// `-∂loss/∂score` of one target.
fn target_coefficient(score: f64, label: bool) -> f64 {
    f64::from(u8::from(label)) - sigmoid(score)
}

/// Loss and gradients of one negative-sampling step, with the positive
/// target first: returns `(loss, ∂loss/∂hidden, [∂loss/∂output_k])`.
pub fn step_gradients(hidden: &[f64], outputs: &[&[f64]]) -> (f64, Vec<f64>, Vec<Vec<f64>>) {
    let mut loss = 0.0;
    let mut grad_hidden = vec![0.0; hidden.len()];
    let mut grad_outputs = Vec::with_capacity(outputs.len());
    for (k, out) in outputs.iter().enumerate() {
        let label = k == 0;
        let f = super::dot(hidden, out);
        loss += target_loss(f, label);
        let g = target_coefficient(f, label);
        grad_hidden.iter_mut().zip(*out).for_each(|(gh, o)| *gh -= g * o);
        grad_outputs.push(hidden.iter().map(|h| -g * h).collect());
    }
    (loss, grad_hidden, grad_outputs)
}

/// One in-place SGD step: moves each output row against its gradient and
/// accumulates the hidden-layer descent direction into `hidden_update`.
/// `targets` holds `(output row, is_positive)`. Returns the step's loss.
fn apply_step(
    hidden: &[f64],
    output: &mut [f64],
    dim: usize,
    targets: &[(usize, bool)],
    lr: f64,
    hidden_update: &mut [f64],
) -> f64 {
    let mut loss = 0.0;
    for &(row, label) in targets {
        let out = &mut output[row * dim..(row + 1) * dim];
        let f = super::dot(hidden, out);
        loss += target_loss(f, label);
        let g = lr * target_coefficient(f, label);
        for ((u, o), h) in hidden_update.iter_mut().zip(out.iter_mut()).zip(hidden) {
            *u += g * *o;
            *o += g * h;
        }
    }
    loss
}

/// Vocabulary sorted by descending count, then token.
#[derive(Debug, Clone)]
struct Vocab {
    words: Vec<String>,
    counts: Vec<u64>,
    index: HashMap<String, usize>,
}

impl Vocab {
    fn build(corpus: &[Vec<String>], min_count: usize) -> Vocab {
        let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
        for sentence in corpus {
            for t in sentence {
                *counts.entry(t.as_str()).or_default() += 1;
            }
        }
        let mut entries: Vec<(&str, u64)> = counts
            .into_iter()
            .filter(|&(_, c)| c >= min_count as u64)
            .collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let words: Vec<String> = entries.iter().map(|(w, _)| (*w).to_owned()).collect();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Vocab {
            counts: entries.iter().map(|&(_, c)| c).collect(),
            words,
            index,
        }
    }
}

/// A validation example: input word, positive target word, negative
/// target words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example {
    pub input: usize,
    pub positive: usize,
    pub negatives: Vec<usize>,
}

/// Trainer state. [`train`] covers the common case; this type exposes the
/// pieces for inspection (loss tracking, per-epoch control).
#[derive(Debug, Clone)]
pub struct Model {
    cfg: TrainConfig,
    vocab: Vocab,
    /// Input rows per word: its own row, then its n-gram rows.
    inputs_of: Vec<Vec<usize>>,
    ngrams: Vec<String>,
    input: Vec<f64>,
    output: Vec<f64>,
    cumulative: Vec<f64>,
    rng: ChaCha8Rng,
    corpus: Vec<Vec<usize>>,
    total_tokens: u64,
    processed: u64,
    epochs_done: usize,
}

impl Model {
    pub fn new(corpus: &[Vec<String>], cfg: &TrainConfig) -> Result<Model> {
        cfg.validate()?;
        let vocab = Vocab::build(corpus, cfg.min_count);
        if vocab.words.is_empty() {
            return Err(Error::Config(format!(
                "no token occurs at least {} times",
                cfg.min_count
            )));
        }
        let v = vocab.words.len();

        let mut ngrams = Vec::new();
        let mut inputs_of: Vec<Vec<usize>> = (0..v).map(|i| vec![i]).collect();
        if let Some((lo, hi)) = cfg.subword {
            let mut table: BTreeMap<String, usize> = BTreeMap::new();
            for w in &vocab.words {
                for g in char_ngrams(w, lo, hi) {
                    table.entry(g).or_insert(0);
                }
            }
            for (i, (g, row)) in table.iter_mut().enumerate() {
                *row = v + i;
                ngrams.push(g.clone());
            }
            for (i, w) in vocab.words.iter().enumerate() {
                let mut rows: Vec<usize> = char_ngrams(w, lo, hi).iter().map(|g| table[g]).collect();
                rows.sort_unstable();
                rows.dedup();
                inputs_of[i].extend(rows);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let dim = cfg.dim;
        let bound = 0.5 / dim as f64;
        let rows = v + ngrams.len();
        let input = (0..rows * dim).map(|_| rng.gen_range(-bound..bound)).collect();
        let output = vec![0.0; v * dim];

        let mut acc = 0.0;
        let cumulative = vocab
            .counts
            .iter()
            .map(|&c| {
                acc += (c as f64).powf(UNIGRAM_POWER);
                acc
            })
            .collect();

        let corpus: Vec<Vec<usize>> = corpus
            .iter()
            .map(|s| s.iter().filter_map(|t| vocab.index.get(t).copied()).collect())
            .collect();
        let total_tokens = corpus.iter().map(|s| s.len() as u64).sum();

        Ok(Model {
            cfg: cfg.clone(),
            vocab,
            inputs_of,
            ngrams,
            input,
            output,
            cumulative,
            rng,
            corpus,
            total_tokens,
            processed: 0,
            epochs_done: 0,
        })
    }

    pub fn vocabulary(&self) -> &[String] {
        &self.vocab.words
    }

    pub fn word_index(&self, token: &str) -> Option<usize> {
        self.vocab.index.get(token).copied()
    }

    fn sample_negative(&mut self) -> usize {
        let total = *self.cumulative.last().expect("vocabulary is non-empty");
        let r = self.rng.gen::<f64>() * total;
        self.cumulative
            .partition_point(|&c| c <= r)
            .min(self.cumulative.len() - 1)
    }

    /// Mean of the input rows of `word`.
    fn compose(&self, word: usize, into: &mut [f64]) {
        let dim = self.cfg.dim;
        let rows = &self.inputs_of[word];
        into.fill(0.0);
        for &r in rows {
            into.iter_mut()
                .zip(&self.input[r * dim..(r + 1) * dim])
                .for_each(|(h, x)| *h += x);
        }
        let scale = 1.0 / rows.len() as f64;
        into.iter_mut().for_each(|h| *h *= scale);
    }

    /// Adds `update` to every input row of `word`.
    fn push_update(&mut self, word: usize, update: &[f64]) {
        let dim = self.cfg.dim;
        for &r in &self.inputs_of[word] {
            self.input[r * dim..(r + 1) * dim]
                .iter_mut()
                .zip(update)
                .for_each(|(x, u)| *x += u);
        }
    }

    fn current_lr(&self) -> f64 {
        let planned = (self.total_tokens * self.cfg.epochs as u64).max(1) as f64;
        let frac = 1.0 - self.processed as f64 / planned;
        self.cfg.learning_rate * frac.max(MIN_LR_FRACTION)
    }

    fn targets(&mut self, positive: usize, buf: &mut Vec<(usize, bool)>) {
        buf.clear();
        buf.push((positive, true));
        for _ in 0..self.cfg.negatives {
            let n = self.sample_negative();
            if n != positive {
                buf.push((n, false));
            }
        }
    }

    /// Runs one pass over the corpus and returns the mean step loss.
    pub fn train_epoch(&mut self) -> f64 {
        let dim = self.cfg.dim;
        let window = self.cfg.window;
        let mut hidden = vec![0.0; dim];
        let mut member = vec![0.0; dim];
        let mut update = vec![0.0; dim];
        let mut targets = Vec::with_capacity(self.cfg.negatives + 1);
        let (mut loss, mut steps) = (0.0, 0u64);

        let corpus = std::mem::take(&mut self.corpus);
        for sentence in &corpus {
            for (pos, &word) in sentence.iter().enumerate() {
                let lr = self.current_lr();
                let lo = pos.saturating_sub(window);
                let hi = (pos + window + 1).min(sentence.len());
                match self.cfg.mode {
                    Mode::SkipGram => {
                        self.compose(word, &mut hidden);
                        for ctx_pos in lo..hi {
                            if ctx_pos == pos {
                                continue;
                            }
                            self.targets(sentence[ctx_pos], &mut targets);
                            update.fill(0.0);
                            loss += apply_step(&hidden, &mut self.output, dim, &targets, lr, &mut update);
                            steps += 1;
                            self.push_update(word, &update);
                            self.compose(word, &mut hidden);
                        }
                    }
                    Mode::Cbow => {
                        let context: Vec<usize> = (lo..hi)
                            .filter(|&p| p != pos)
                            .map(|p| sentence[p])
                            .collect();
                        if context.is_empty() {
                            continue;
                        }
                        hidden.fill(0.0);
                        for &c in &context {
                            self.compose(c, &mut member);
                            hidden.iter_mut().zip(&member).for_each(|(h, m)| *h += m);
                        }
                        let scale = 1.0 / context.len() as f64;
                        hidden.iter_mut().for_each(|h| *h *= scale);
                        self.targets(word, &mut targets);
                        update.fill(0.0);
                        loss += apply_step(&hidden, &mut self.output, dim, &targets, lr, &mut update);
                        steps += 1;
                        for &c in &context {
                            self.push_update(c, &update);
                        }
                    }
                }
                self.processed += 1;
            }
        }
        self.corpus = corpus;
        self.epochs_done += 1;
        if steps == 0 {
            0.0
        } else {
            loss / steps as f64
        }
    }

    pub fn train_all(&mut self) {
        while self.epochs_done < self.cfg.epochs {
            self.train_epoch();
        }
    }

    /// Draws `n` (input, positive, negatives) examples from the corpus
    /// with a dedicated RNG; the model's own RNG is untouched.
    pub fn sample_examples(&self, n: usize, seed: u64) -> Vec<Example> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = *self.cumulative.last().expect("vocabulary is non-empty");
        let sentences: Vec<&Vec<usize>> = self.corpus.iter().filter(|s| s.len() >= 2).collect();
        if sentences.is_empty() {
            return Vec::new();
        }
        (0..n)
            .map(|_| {
                let s = sentences[rng.gen_range(0..sentences.len())];
                let pos = rng.gen_range(0..s.len());
                let lo = pos.saturating_sub(self.cfg.window);
                let hi = (pos + self.cfg.window + 1).min(s.len());
                let mut ctx = rng.gen_range(lo..hi - 1);
                if ctx >= pos {
                    ctx += 1;
                }
                let negatives = (0..self.cfg.negatives)
                    .map(|_| {
                        let r = rng.gen::<f64>() * total;
                        self.cumulative
                            .partition_point(|&c| c <= r)
                            .min(self.cumulative.len() - 1)
                    })
                    .filter(|&w| w != s[ctx])
                    .collect();
                Example {
                    input: s[pos],
                    positive: s[ctx],
                    negatives,
                }
            })
            .collect()
    }

    /// Mean negative log-likelihood of `examples` under the current
    /// parameters, using the input word's composed vector as hidden layer.
    pub fn loss(&self, examples: &[Example]) -> f64 {
        if examples.is_empty() {
            return 0.0;
        }
        let dim = self.cfg.dim;
        let mut hidden = vec![0.0; dim];
        let out = |w: usize| &self.output[w * dim..(w + 1) * dim];
        let total: f64 = examples
            .iter()
            .map(|e| {
                self.compose(e.input, &mut hidden);
                let mut rows = vec![out(e.positive)];
                rows.extend(e.negatives.iter().map(|&n| out(n)));
                step_gradients(&hidden, &rows).0
            })
            .sum();
        total / examples.len() as f64
    }

    /// Exports composed word vectors, plus n-gram vectors when training used
    /// subwords. A word's exported vector is the sum of its input rows.
    pub fn to_store(&self) -> Result<EmbeddingStore> {
        let dim = self.cfg.dim;
        let mut store = EmbeddingStore::new(dim)?;
        for (i, w) in self.vocab.words.iter().enumerate() {
            let mut v = vec![0.0; dim];
            for &r in &self.inputs_of[i] {
                v.iter_mut()
                    .zip(&self.input[r * dim..(r + 1) * dim])
                    .for_each(|(a, x)| *a += x);
            }
            store.insert(w.clone(), &v)?;
        }
        if let Some(range) = self.cfg.subword {
            let v = self.vocab.words.len();
            store.set_ngrams(
                range,
                self.ngrams.iter().enumerate().map(|(i, g)| {
                    let r = v + i;
                    (g.clone(), self.input[r * dim..(r + 1) * dim].to_vec())
                }),
            )?;
        }
        Ok(store)
    }
}

/// Trains vectors on `corpus` (one token sequence per sentence).
pub fn train(corpus: &[Vec<String>], cfg: &TrainConfig) -> Result<EmbeddingStore> {
    let mut model = Model::new(corpus, cfg)?;
    model.train_all();
    model.to_store()
}

/// Splits each non-empty line into whitespace-separated tokens.
pub fn read_corpus<R: std::io::BufRead>(input: R) -> Result<Vec<Vec<String>>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line?;
        let tokens: Vec<String> = line.split_whitespace().map(str::to_owned).collect();
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mode: Mode) -> TrainConfig {
        TrainConfig {
            dim: 5,
            epochs: 50,
            min_count: 1,
            window: 2,
            negatives: 2,
            ..TrainConfig::new(mode)
        }
    }

    fn corpus(text: &str) -> Vec<Vec<String>> {
        text.lines()
            .map(|l| l.split_whitespace().map(String::from).collect())
            .collect()
    }

    #[test]
    fn config_errors() {
        let mut c = TrainConfig::new(Mode::Cbow);
        c.window = 0;
        assert!(c.validate().is_err());
        let c = TrainConfig {
            min_count: 10,
            ..TrainConfig::new(Mode::SkipGram)
        };
        assert!(matches!(train(&corpus("a b c"), &c), Err(Error::Config(_))));
    }

    #[test]
    fn step_update_matches_gradients() {
        let dim = 3;
        let hidden = [0.2, -0.1, 0.4];
        let mut output = vec![0.3, 0.1, -0.2, -0.5, 0.2, 0.7];
        let before = output.clone();
        let lr = 0.05;
        let mut update = vec![0.0; dim];
        let loss = apply_step(&hidden, &mut output, dim, &[(0, true), (1, false)], lr, &mut update);

        let rows: Vec<&[f64]> = vec![&before[0..3], &before[3..6]];
        let (l, gh, go) = step_gradients(&hidden, &rows);
        assert!((loss - l).abs() < 1e-15);
        for k in 0..dim {
            assert!((update[k] + lr * gh[k]).abs() < 1e-15);
            assert!((output[k] - (before[k] - lr * go[0][k])).abs() < 1e-15);
            assert!((output[3 + k] - (before[3 + k] - lr * go[1][k])).abs() < 1e-15);
        }
    }

    #[test]
    fn cluster_members_end_up_closer() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut text = String::new();
        for line in 0..200 {
            let prefix = if line % 2 == 0 { "a" } else { "c" };
            for _ in 0..20 {
                text.push_str(&format!("{prefix}{} ", rng.gen_range(0..4)));
            }
            text.push('\n');
        }
        for mode in [Mode::SkipGram, Mode::Cbow] {
            let s = train(&corpus(&text), &cfg(mode)).unwrap();
            let intra = s.similarity("a0", "a1").unwrap();
            let inter = s.similarity("a0", "c1").unwrap();
            assert!(intra > inter, "{mode:?}: {intra} vs {inter}");
        }
    }

    #[test]
    fn subword_store_resolves_unseen_tokens() {
        let c = TrainConfig {
            subword: Some((3, 4)),
            ..cfg(Mode::SkipGram)
        };
        let s = train(&corpus("getLength setLength\nsetLength getLength"), &c).unwrap();
        assert!(s.has_ngrams());
        assert!(s.vector_for("getLen").is_ok());
        assert!(s.vector_for("qq").is_err());
    }

    #[test]
    fn subword_vectors_survive_text_round_trip() {
        use crate::embeddings::{load_ngram_vectors_inferred, load_vectors, write_ngram_vectors, write_vectors};
        let c = TrainConfig {
            subword: Some((3, 6)),
            ..cfg(Mode::Cbow)
        };
        let s = train(&corpus("getLength setLength\nsetLength getLength"), &c).unwrap();
        let (mut w, mut g) = (Vec::new(), Vec::new());
        write_vectors(&s, &mut w).unwrap();
        assert!(write_ngram_vectors(&s, &mut g).unwrap());
        let mut back = load_vectors(w.as_slice()).unwrap();
        load_ngram_vectors_inferred(&mut back, g.as_slice()).unwrap();
        assert_eq!(back.vector_for("getLen").unwrap(), s.vector_for("getLen").unwrap());
        assert_eq!(back.vector_for("setLength").unwrap(), s.vector_for("setLength").unwrap());
    }

    #[test]
    fn same_seed_same_vectors() {
        let text = "x y z x y\nz z y x";
        let a = train(&corpus(text), &cfg(Mode::Cbow)).unwrap();
        let b = train(&corpus(text), &cfg(Mode::Cbow)).unwrap();
        assert_eq!(a, b);
        let c = train(&corpus(text), &TrainConfig { seed: 2, ..cfg(Mode::Cbow) }).unwrap();
        assert_ne!(a, c);
    }
}
