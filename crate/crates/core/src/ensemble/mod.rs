//! Learned combination of the individual representations' scores and a few
//! identifier features, evaluated leave-one-out.

pub mod svr;

use std::collections::HashSet;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evaluator::{spearman, ScoreMatrix};
use crate::model::{Benchmark, Identifier, IdentifierPair, PairId, Task};
pub use svr::{Standardizer, Svr, SvrParams};

/// Score columns the ensemble consumes, in feature order.
pub const REPRESENTATIONS: [&str; 7] = ["lv", "nw", "w2v-cbow", "w2v-sg", "ft-cbow", "ft-sg", "path-based"];
pub const N_FEATURES: usize = 13;

/// Splits an identifier into lowercase subtokens at `_`/`$`, camel-case
/// humps and acronym boundaries. Digits stay with the preceding subtoken.
pub fn tokenize_identifier(id: &str) -> Vec<String> {
    let mut out = Vec::new();
    for segment in id.split(['_', '$']).filter(|s| !s.is_empty()) {
        let c: Vec<char> = segment.chars().collect();
        let mut start = 0;
        for i in 1..c.len() {
            let hump = (c[i - 1].is_ascii_lowercase() || c[i - 1].is_ascii_digit()) && c[i].is_ascii_uppercase();
            let acronym_end = c[i - 1].is_ascii_uppercase()
                && c[i].is_ascii_uppercase()
                && c.get(i + 1).is_some_and(|n| n.is_ascii_lowercase());
            if hump || acronym_end {
                out.push(c[start..i].iter().collect::<String>().to_lowercase());
                start = i;
            }
        }
        out.push(c[start..].iter().collect::<String>().to_lowercase());
    }
    out
}

/// Lowercase English word list, one word per line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dictionary {
    words: HashSet<String>,
}

impl Dictionary {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(words: I) -> Self {
        Dictionary {
            words: words.into_iter().map(Into::into).collect(),
        }
    }

    pub fn read<R: BufRead>(input: R) -> Result<Self> {
        let mut words = HashSet::new();
        for line in input.lines() {
            let w = line?.trim().to_lowercase();
            if !w.is_empty() {
                words.insert(w);
            }
        }
        Ok(Dictionary { words })
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Shape features of one identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierShape {
    pub len: usize,
    pub subtokens: usize,
    pub non_dictionary: usize,
}

impl IdentifierShape {
    pub fn of(id: &Identifier, dict: &Dictionary) -> Self {
        let toks = tokenize_identifier(id.as_str());
        IdentifierShape {
            len: id.as_str().chars().count(),
            subtokens: toks.len(),
            non_dictionary: toks.iter().filter(|t| !dict.contains(t)).count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureVector {
    pub scores: [f64; 7],
    pub first: IdentifierShape,
    pub second: IdentifierShape,
}

impl FeatureVector {
    /// scores, len1, len2, subtok1, subtok2, nondict1, nondict2.
    pub fn to_vec(&self) -> Vec<f64> {
        let mut v = self.scores.to_vec();
        v.extend([
            self.first.len as f64,
            self.second.len as f64,
            self.first.subtokens as f64,
            self.second.subtokens as f64,
            self.first.non_dictionary as f64,
            self.second.non_dictionary as f64,
        ]);
        v
    }
}

pub fn extract_features(pair: &IdentifierPair, scores: [f64; 7], dict: &Dictionary) -> Result<FeatureVector> {
    if dict.is_empty() {
        return Err(Error::Config("empty dictionary".into()));
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::Validation("non-finite score".into()));
    }
    Ok(FeatureVector {
        scores,
        first: IdentifierShape::of(&pair.id1, dict),
        second: IdentifierShape::of(&pair.id2, dict),
    })
}

/// Features of one pair before missing scores are imputed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairFeatures {
    pub pair: IdentifierPair,
    pub scores: [Option<f64>; 7],
    pub first: IdentifierShape,
    pub second: IdentifierShape,
}

impl PairFeatures {
    pub fn new(pair: IdentifierPair, scores: [Option<f64>; 7], dict: &Dictionary) -> Result<Self> {
        if dict.is_empty() {
            return Err(Error::Config("empty dictionary".into()));
        }
        Ok(PairFeatures {
            first: IdentifierShape::of(&pair.id1, dict),
            second: IdentifierShape::of(&pair.id2, dict),
            pair,
            scores,
        })
    }

    pub fn complete(&self, fill: &[f64; 7]) -> FeatureVector {
        let mut scores = [0.0; 7];
        for (k, s) in scores.iter_mut().enumerate() {
            *s = self.scores[k].unwrap_or(fill[k]);
        }
        FeatureVector {
            scores,
            first: self.first,
            second: self.second,
        }
    }
}

/// Column means over present values; 0 for a column with none.
pub fn column_means<'a>(rows: impl IntoIterator<Item = &'a PairFeatures>) -> [f64; 7] {
    let mut sum = [0.0; 7];
    let mut cnt = [0usize; 7];
    for r in rows {
        for k in 0..7 {
            if let Some(v) = r.scores[k] {
                sum[k] += v;
                cnt[k] += 1;
            }
        }
    }
    let mut out = [0.0; 7];
    for k in 0..7 {
        if cnt[k] > 0 {
            out[k] = sum[k] / cnt[k] as f64;
        }
    }
    out
}

/// Training rows and gold targets for the pairs of `bench` with a score for
/// `task`. Matrix columns are looked up by [`REPRESENTATIONS`] name; an
/// absent column counts as missing everywhere.
pub fn training_set(
    matrix: &ScoreMatrix,
    bench: &Benchmark,
    task: Task,
    dict: &Dictionary,
) -> Result<(Vec<PairFeatures>, Vec<f64>)> {
    let index: std::collections::HashMap<PairId, usize> = matrix
        .pairs
        .iter()
        .enumerate()
        .map(|(i, p)| (PairId::canonical(&p.id1, &p.id2), i))
        .collect();
    let columns: Vec<Option<&Vec<Option<f64>>>> = REPRESENTATIONS
        .iter()
        .map(|name| matrix.column(name).map(|c| &c.scores))
        .collect();
    let mut rows = Vec::new();
    let mut targets = Vec::new();
    for (pair, gold) in bench.task_pairs(task) {
        let row = index.get(&PairId::canonical(&pair.id1, &pair.id2));
        let mut scores = [None; 7];
        for (k, col) in columns.iter().enumerate() {
            scores[k] = match (col, row) {
                (Some(c), Some(&i)) => c[i],
                _ => None,
            };
        }
        rows.push(PairFeatures::new(pair.clone(), scores, dict)?);
        targets.push(gold);
    }
    Ok((rows, targets))
}

/// Imputation means plus the fitted regressor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleModel {
    pub representations: Vec<String>,
    pub imputation: [f64; 7],
    pub regressor: Svr,
}

impl EnsembleModel {
    pub fn fit(rows: &[PairFeatures], targets: &[f64], params: SvrParams) -> Result<Self> {
        let imputation = column_means(rows);
        let xs: Vec<Vec<f64>> = rows.iter().map(|r| r.complete(&imputation).to_vec()).collect();
        Ok(EnsembleModel {
            representations: REPRESENTATIONS.iter().map(|s| s.to_string()).collect(),
            imputation,
            regressor: Svr::fit(&xs, targets, params)?,
        })
    }

    pub fn predict(&self, row: &PairFeatures) -> f64 {
        self.regressor.predict(&row.complete(&self.imputation).to_vec())
    }

    pub fn predict_features(&self, f: &FeatureVector) -> f64 {
        self.regressor.predict(&f.to_vec())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LooResult {
    pub predictions: Vec<f64>,
    pub correlation: f64,
    /// Folds whose solver hit the iteration cap.
    pub unconverged: usize,
}

/// For each pair, fits on all others (imputing with the training fold's
/// column means) and predicts the held-out pair; the result is the
/// Spearman correlation of predictions with targets.
pub fn leave_one_out(rows: &[PairFeatures], targets: &[f64], params: SvrParams) -> Result<LooResult> {
    if rows.len() != targets.len() {
        return Err(Error::Validation("rows and targets differ in length".into()));
    }
    if rows.len() < 4 {
        return Err(Error::InsufficientData(format!(
            "{} pairs, need at least 4 for leave-one-out",
            rows.len()
        )));
    }
    let n = rows.len();
    let fold = |i: usize| -> Result<(f64, bool)> {
        let train_rows: Vec<PairFeatures> =
            rows.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        let train_targets: Vec<f64> =
            targets.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, t)| *t).collect();
        let m = EnsembleModel::fit(&train_rows, &train_targets, params)?;
        Ok((m.predict(&rows[i]), m.regressor.converged))
    };

    let threads = std::thread::available_parallelism().map_or(1, |p| p.get()).min(n);
    let chunk = n.div_ceil(threads);
    let results: Vec<Result<(f64, bool)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..n)
            .step_by(chunk)
            .map(|start| {
                let fold = &fold;
                s.spawn(move || (start..(start + chunk).min(n)).map(fold).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("leave-one-out worker panicked"))
            .collect()
    });
    let mut predictions = Vec::with_capacity(n);
    let mut unconverged = 0;
    for r in results {
        let (p, ok) = r?;
        predictions.push(p);
        if !ok {
            unconverged += 1;
        }
    }
    let correlation = spearman(&predictions, targets)?;
    Ok(LooResult {
        predictions,
        correlation,
        unconverged,
    })
}
