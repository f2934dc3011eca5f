//! Agreement between a semantic representation and a benchmark, measured
//! as Spearman rank correlation over the pairs both can score.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{format_score, Benchmark, Identifier, IdentifierPair, PairId, Task, Variant};

/// Average ranks (1-based); tied values share the mean of their positions.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // Positions i..j (0-based) share rank mean((i+1)..=j).
        let rank = (i + j + 1) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = rank;
        }
        i = j;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    sxy / (sxx * syy).sqrt()
}

/// Spearman's rank correlation: Pearson correlation of average ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::Validation(format!(
            "length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} points, need at least 3",
            x.len()
        )));
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(Error::Validation("non-finite value".into()));
    }
    let constant = |v: &[f64]| v.iter().all(|a| *a == v[0]);
    if constant(x) || constant(y) {
        return Err(Error::UndefinedCorrelation("constant input".into()));
    }
    let r = pearson(&average_ranks(x), &average_ranks(y));
    Ok(r.clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreColumn {
    pub name: String,
    pub scores: Vec<Option<f64>>,
}

/// Per-pair scores of several representations, aligned with `pairs`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ScoreMatrix {
    pub pairs: Vec<IdentifierPair>,
    pub columns: Vec<ScoreColumn>,
}

impl ScoreMatrix {
    pub fn new(pairs: Vec<IdentifierPair>) -> Self {
        ScoreMatrix {
            pairs,
            columns: Vec::new(),
        }
    }

    pub fn add_column(&mut self, name: impl Into<String>, scores: Vec<Option<f64>>) -> Result<()> {
        let name = name.into();
        if scores.len() != self.pairs.len() {
            return Err(Error::Validation(format!(
                "column {name} has {} scores for {} pairs",
                scores.len(),
                self.pairs.len()
            )));
        }
        if scores.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::Validation(format!("column {name} has non-finite scores")));
        }
        if self.column(&name).is_some() {
            return Err(Error::Validation(format!("duplicate column {name}")));
        }
        self.columns.push(ScoreColumn { name, scores });
        Ok(())
    }

    /// Adds a column from `(pair, score)` rows, matched to the matrix pairs
    /// irrespective of identifier order. Pairs without a row are missing.
    pub fn add_keyed_column(
        &mut self,
        name: impl Into<String>,
        rows: &[(IdentifierPair, Option<f64>)],
    ) -> Result<()> {
        let by_key: HashMap<PairId, Option<f64>> = rows
            .iter()
            .map(|(p, s)| (PairId::canonical(&p.id1, &p.id2), *s))
            .collect();
        let scores = self
            .pairs
            .iter()
            .map(|p| by_key.get(&PairId::canonical(&p.id1, &p.id2)).copied().flatten())
            .collect();
        self.add_column(name, scores)
    }

    pub fn column(&self, name: &str) -> Option<&ScoreColumn> {
        self.columns.iter().find(|c| c.name == name)
    }

    /// Matrix over every pair of `bench`.
    pub fn for_benchmark(bench: &Benchmark) -> Self {
        ScoreMatrix::new(bench.scores.iter().map(|g| g.pair.clone()).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub correlation: f64,
    /// Share of the task's gold pairs that the representation scores.
    pub coverage: f64,
    /// Pairs the correlation is computed over.
    pub n: usize,
}

/// Correlates `scores` (aligned with `pairs`) with the gold scores of
/// `task`, over pairs where both are present.
pub fn evaluate(
    pairs: &[IdentifierPair],
    scores: &[Option<f64>],
    bench: &Benchmark,
    task: Task,
) -> Result<Evaluation> {
    evaluate_subset(pairs, scores, bench, task, |_| true)
}

fn evaluate_subset(
    pairs: &[IdentifierPair],
    scores: &[Option<f64>],
    bench: &Benchmark,
    task: Task,
    keep: impl Fn(&PairId) -> bool,
) -> Result<Evaluation> {
    if pairs.len() != scores.len() {
        return Err(Error::Validation("scores not aligned with pairs".into()));
    }
    let by_key: HashMap<PairId, f64> = pairs
        .iter()
        .zip(scores)
        .filter_map(|(p, s)| s.map(|s| (PairId::canonical(&p.id1, &p.id2), s)))
        .collect();
    let mut total = 0usize;
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for (pair, gold) in bench.task_pairs(task) {
        let key = PairId::canonical(&pair.id1, &pair.id2);
        if !keep(&key) {
            continue;
        }
        total += 1;
        if let Some(&s) = by_key.get(&key) {
            xs.push(s);
            ys.push(gold);
        }
    }
    if xs.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "{} comparable pairs for {task}, need at least 3",
            xs.len()
        )));
    }
    Ok(Evaluation {
        correlation: spearman(&xs, &ys)?,
        coverage: xs.len() as f64 / total as f64,
        n: xs.len(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetTag {
    Abbreviations,
    Opposites,
    Synonyms,
    AddedSubtoken,
    TrickyTokenization,
}

impl FromStr for SubsetTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace([' ', '-'], "_").as_str() {
            "abbreviations" | "abbreviation" => Ok(SubsetTag::Abbreviations),
            "opposites" | "opposite" => Ok(SubsetTag::Opposites),
            "synonyms" | "synonym" => Ok(SubsetTag::Synonyms),
            "added_subtoken" | "added_subtokens" => Ok(SubsetTag::AddedSubtoken),
            "tricky_tokenization" => Ok(SubsetTag::TrickyTokenization),
            other => Err(Error::Validation(format!("unknown subset tag {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedPair {
    pub tag: SubsetTag,
    pub pair_id: PairId,
}

/// Brings `a|b` keys into canonical order; other keys are kept verbatim.
fn normalize_key(raw: &str) -> PairId {
    if let Some((a, b)) = raw.split_once('|') {
        if let (Ok(a), Ok(b)) = (Identifier::new(a), Identifier::new(b)) {
            return PairId::canonical(&a, &b);
        }
    }
    PairId(raw.to_owned())
}

/// Reads a `pair_id,tag` CSV.
pub fn parse_tags_csv<R: Read>(input: R) -> Result<Vec<TaggedPair>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line() as usize).unwrap_or(0),
            message: e.to_string(),
        })?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        if rec.len() != 2 {
            return Err(Error::Parse {
                line,
                message: "expected `pair_id,tag`".into(),
            });
        }
        out.push(TaggedPair {
            pair_id: normalize_key(&rec[0]),
            tag: rec[1].parse()?,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Ok,
    /// Fewer than three comparable pairs.
    Insufficient,
    /// Scores or gold values are constant.
    Undefined,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubsetCell {
    pub representation: String,
    pub tag: SubsetTag,
    pub task: Task,
    pub status: CellStatus,
    pub result: Option<Evaluation>,
}

fn cell_of(r: Result<Evaluation>) -> (CellStatus, Option<Evaluation>) {
    match r {
        Ok(e) => (CellStatus::Ok, Some(e)),
        Err(Error::UndefinedCorrelation(_)) => (CellStatus::Undefined, None),
        Err(_) => (CellStatus::Insufficient, None),
    }
}

/// Per representation, tag and task: [`evaluate`] restricted to the pairs
/// carrying the tag.
pub fn subset_report(matrix: &ScoreMatrix, bench: &Benchmark, tags: &[TaggedPair]) -> Vec<SubsetCell> {
    let mut by_tag: BTreeMap<SubsetTag, Vec<&PairId>> = BTreeMap::new();
    for t in tags {
        by_tag.entry(t.tag).or_default().push(&t.pair_id);
    }
    let mut out = Vec::new();
    for col in &matrix.columns {
        for (tag, members) in &by_tag {
            for task in Task::ALL {
                let keep = |k: &PairId| members.contains(&k);
                let (status, result) =
                    cell_of(evaluate_subset(&matrix.pairs, &col.scores, bench, task, keep));
                out.push(SubsetCell {
                    representation: col.name.clone(),
                    tag: *tag,
                    task,
                    status,
                    result,
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub representation: String,
    pub task: Task,
    pub variant: Option<Variant>,
    pub status: CellStatus,
    pub correlation: Option<f64>,
    pub coverage: Option<f64>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub rows: Vec<ReportRow>,
    pub subsets: Vec<SubsetCell>,
}

impl EvaluationReport {
    /// Evaluates every column on every task of `bench`.
    pub fn build(matrix: &ScoreMatrix, bench: &Benchmark, tags: &[TaggedPair]) -> Self {
        let mut rows = Vec::new();
        for col in &matrix.columns {
            for task in Task::ALL {
                let (status, result) = cell_of(evaluate(&matrix.pairs, &col.scores, bench, task));
                rows.push(ReportRow {
                    representation: col.name.clone(),
                    task,
                    variant: bench.variant,
                    status,
                    correlation: result.map(|e| e.correlation),
                    coverage: result.map(|e| e.coverage),
                    n: result.map_or(0, |e| e.n),
                });
            }
        }
        EvaluationReport {
            rows,
            subsets: if tags.is_empty() {
                Vec::new()
            } else {
                subset_report(matrix, bench, tags)
            },
        }
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<24} {:<22} {:<8} {:>11} {:>9} {:>6}",
            "representation", "task", "variant", "correlation", "coverage", "n"
        );
        for r in &self.rows {
            let opt = |v: Option<f64>| v.map(format_score).unwrap_or_else(|| "-".into());
            let variant = r.variant.map_or("-".to_string(), |v| {
                serde_json::to_value(v).ok().and_then(|j| j.as_str().map(String::from)).unwrap_or_default()
            });
            let _ = writeln!(
                s,
                "{:<24} {:<22} {:<8} {:>11} {:>9} {:>6}",
                r.representation,
                r.task.as_str(),
                variant,
                opt(r.correlation),
                opt(r.coverage),
                r.n
            );
        }
        s
    }

    pub fn write_json<W: Write>(&self, out: W) -> Result<()> {
        serde_json::to_writer_pretty(out, self)?;
        Ok(())
    }
}

/// Reads a `id1,id2,score` CSV; an empty score means "not scored".
pub fn parse_scores_csv<R: Read>(input: R) -> Result<Vec<(IdentifierPair, Option<f64>)>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    let headers = rdr
        .headers()
        .map_err(|e| Error::Parse { line: 1, message: e.to_string() })?
        .clone();
    if headers.iter().collect::<Vec<_>>() != ["id1", "id2", "score"] {
        return Err(Error::Parse {
            line: 1,
            message: "expected header `id1,id2,score`".into(),
        });
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line() as usize).unwrap_or(0),
            message: e.to_string(),
        })?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let pair = IdentifierPair::from_strs(&rec[0], &rec[1]).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        let score = match &rec[2] {
            "" => None,
            s if s.eq_ignore_ascii_case("nan") => None,
            s => {
                let v: f64 = s.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad score {s:?}"),
                })?;
                Some(v)
            }
        };
        out.push((pair, score));
    }
    Ok(out)
}

pub fn write_scores_csv<W: Write>(
    pairs: &[IdentifierPair],
    scores: &[Option<f64>],
    mut out: W,
) -> Result<()> {
    writeln!(out, "id1,id2,score")?;
    for (p, s) in pairs.iter().zip(scores) {
        match s {
            // Full precision: scores feed rank statistics downstream.
            Some(v) => writeln!(out, "{},{},{}", p.id1, p.id2, v)?,
            None => writeln!(out, "{},{},", p.id1, p.id2)?,
        }
    }
    Ok(())
}
