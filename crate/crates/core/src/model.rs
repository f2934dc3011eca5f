//! Core data types and the flat-file formats they travel in.
//!
//! Benchmarks, ratings and scores are CSV with `\n` line endings; code
//! contexts are JSON lines. Scores are written with six decimals.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when comparing serialized scores.
pub const SCORE_TOLERANCE: f64 = 1e-6;

pub const BENCHMARK_HEADER: &str = "id1,id2,relatedness,similarity,contextual_similarity";
pub const DIRECT_HEADER: &str = "participant,pair_id,id1,id2,relatedness,similarity";
pub const INDIRECT_HEADER: &str = "participant,pair_id,id1,id2,context_owner,chosen";

/// A JavaScript identifier name (ASCII letters, digits, `_` and `$`, not
/// starting with a digit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Identifier(String);

impl Identifier {
    pub fn new(text: impl Into<String>) -> Result<Self> {
        let text = text.into();
        if !is_identifier(&text) {
            return Err(Error::Validation(format!("not an identifier: {text:?}")));
        }
        Ok(Identifier(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn is_identifier_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_' || c == '$'
}

pub fn is_identifier_part(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '$'
}

pub fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if is_identifier_start(c) => chars.all(is_identifier_part),
        _ => false,
    }
}

impl fmt::Display for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl TryFrom<String> for Identifier {
    type Error = Error;

    fn try_from(value: String) -> Result<Self> {
        Identifier::new(value)
    }
}

impl From<Identifier> for String {
    fn from(id: Identifier) -> String {
        id.0
    }
}

impl AsRef<str> for Identifier {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Opaque key of a pair within a dataset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PairId(pub String);

impl PairId {
    /// `id1|id2` with the lexicographically smaller identifier first.
    pub fn canonical(a: &Identifier, b: &Identifier) -> Self {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        PairId(format!("{lo}|{hi}"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdentifierPair {
    pub id1: Identifier,
    pub id2: Identifier,
    pub pair_id: PairId,
}

impl IdentifierPair {
    /// Builds a pair keyed by its canonical `id1|id2` key.
    pub fn new(id1: Identifier, id2: Identifier) -> Result<Self> {
        let pair_id = PairId::canonical(&id1, &id2);
        Self::with_key(id1, id2, pair_id)
    }

    pub fn with_key(id1: Identifier, id2: Identifier, pair_id: PairId) -> Result<Self> {
        if id1 == id2 {
            return Err(Error::Validation(format!(
                "pair of identical identifiers: {id1}"
            )));
        }
        Ok(IdentifierPair { id1, id2, pair_id })
    }

    /// Convenience constructor from raw strings.
    pub fn from_strs(id1: &str, id2: &str) -> Result<Self> {
        Self::new(Identifier::new(id1)?, Identifier::new(id2)?)
    }

    pub fn get(&self, which: Choice) -> &Identifier {
        match which {
            Choice::Id1 => &self.id1,
            Choice::Id2 => &self.id2,
        }
    }
}

/// A five-point Likert answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Likert(u8);

impl Likert {
    pub fn new(value: u8) -> Result<Self> {
        if (1..=5).contains(&value) {
            Ok(Likert(value))
        } else {
            Err(Error::Validation(format!(
                "Likert rating {value} outside 1..=5"
            )))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// `(r - 1) / 4`, mapping 1..=5 onto [0, 1].
    pub fn unit(self) -> f64 {
        f64::from(self.0 - 1) / 4.0
    }
}

impl TryFrom<u8> for Likert {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Likert::new(value)
    }
}

impl From<Likert> for u8 {
    fn from(l: Likert) -> u8 {
        l.0
    }
}

/// Refers to one of the two identifiers of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Choice {
    Id1,
    Id2,
}

impl Choice {
    pub fn as_str(self) -> &'static str {
        match self {
            Choice::Id1 => "id1",
            Choice::Id2 => "id2",
        }
    }

    pub fn other(self) -> Choice {
        match self {
            Choice::Id1 => Choice::Id2,
            Choice::Id2 => Choice::Id1,
        }
    }
}

impl std::str::FromStr for Choice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id1" => Ok(Choice::Id1),
            "id2" => Ok(Choice::Id2),
            other => Err(Error::Validation(format!(
                "expected `id1` or `id2`, found {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectRating {
    pub participant: String,
    pub pair: IdentifierPair,
    pub relatedness: Likert,
    pub similarity: Likert,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndirectRating {
    pub participant: String,
    pub pair: IdentifierPair,
    pub context_owner: Choice,
    pub chosen: Choice,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RatingKind {
    Direct,
    Indirect,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Ratings {
    Direct(Vec<DirectRating>),
    Indirect(Vec<IndirectRating>),
}

impl Ratings {
    pub fn len(&self) -> usize {
        match self {
            Ratings::Direct(v) => v.len(),
            Ratings::Indirect(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldScore {
    pub pair: IdentifierPair,
    pub relatedness: f64,
    pub similarity: f64,
    pub contextual_similarity: Option<f64>,
}

impl GoldScore {
    pub fn task(&self, task: Task) -> Option<f64> {
        match task {
            Task::Relatedness => Some(self.relatedness),
            Task::Similarity => Some(self.similarity),
            Task::Contextual => self.contextual_similarity,
        }
    }

    /// Equality of pairs and of every score up to [`SCORE_TOLERANCE`].
    pub fn approx_eq(&self, other: &GoldScore) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= SCORE_TOLERANCE;
        self.pair.id1 == other.pair.id1
            && self.pair.id2 == other.pair.id2
            && close(self.relatedness, other.relatedness)
            && close(self.similarity, other.similarity)
            && match (self.contextual_similarity, other.contextual_similarity) {
                (Some(a), Some(b)) => close(a, b),
                (None, None) => true,
                _ => false,
            }
    }
}

/// The three benchmark tasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Relatedness,
    Similarity,
    Contextual,
}

impl Task {
    pub const ALL: [Task; 3] = [Task::Relatedness, Task::Similarity, Task::Contextual];

    pub fn as_str(self) -> &'static str {
        match self {
            Task::Relatedness => "relatedness",
            Task::Similarity => "similarity",
            Task::Contextual => "contextual_similarity",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relatedness" => Ok(Task::Relatedness),
            "similarity" => Ok(Task::Similarity),
            "contextual" | "contextual_similarity" => Ok(Task::Contextual),
            other => Err(Error::Validation(format!("unknown task {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Small,
    Medium,
    Large,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Small, Variant::Medium, Variant::Large];

    /// The published cleaning thresholds `(tau, theta)` of each variant.
    pub fn thresholds(self) -> Thresholds {
        let (tau, theta) = match self {
            Variant::Small => (0.215, 0.4),
            Variant::Medium => (0.23, 0.5),
            Variant::Large => (0.25, 0.6),
        };
        Thresholds { tau, theta }
    }

    pub fn from_thresholds(t: Thresholds) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| {
            let p = v.thresholds();
            (p.tau - t.tau).abs() < 1e-12 && (p.theta - t.theta).abs() < 1e-12
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    pub tau: f64,
    pub theta: f64,
}

/// A set of gold scores together with the cleaning settings that produced
/// it. The CSV form carries only the scores, so both metadata fields come
/// back as `None` from [`parse_benchmark_csv`].
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Benchmark {
    pub variant: Option<Variant>,
    pub thresholds: Option<Thresholds>,
    pub scores: Vec<GoldScore>,
}

impl Benchmark {
    pub fn new(scores: Vec<GoldScore>) -> Result<Self> {
        let b = Benchmark {
            variant: None,
            thresholds: None,
            scores,
        };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for g in &self.scores {
            let key = PairId::canonical(&g.pair.id1, &g.pair.id2);
            if !seen.insert(key) {
                return Err(Error::Validation(format!(
                    "duplicate pair {} / {}",
                    g.pair.id1, g.pair.id2
                )));
            }
            check_unit("relatedness", g.relatedness)?;
            check_unit("similarity", g.similarity)?;
            if let Some(c) = g.contextual_similarity {
                check_unit("contextual_similarity", c)?;
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    /// Pairs that carry a gold score for `task`.
    pub fn task_pairs(&self, task: Task) -> impl Iterator<Item = (&IdentifierPair, f64)> {
        self.scores
            .iter()
            .filter_map(move |g| g.task(task).map(|s| (&g.pair, s)))
    }

    pub fn find(&self, id1: &str, id2: &str) -> Option<&GoldScore> {
        self.scores.iter().find(|g| {
            (g.pair.id1.as_str() == id1 && g.pair.id2.as_str() == id2)
                || (g.pair.id1.as_str() == id2 && g.pair.id2.as_str() == id1)
        })
    }
}

fn check_unit(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(Error::Validation(format!("{name} {v} outside [0, 1]")))
    }
}

/// A blanked occurrence of the context owner: zero-based line, byte column
/// and byte length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlankSlot {
    pub line: usize,
    pub col: usize,
    pub len: usize,
}

impl Serialize for CodeContext {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawContext {
            owner: self.owner.as_str().to_owned(),
            lines: self.lines.clone(),
            blanks: self.blanks.iter().map(|b| [b.line, b.col, b.len]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CodeContext {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawContext::deserialize(d)?;
        let owner = Identifier::new(raw.owner).map_err(serde::de::Error::custom)?;
        let blanks = raw
            .blanks
            .into_iter()
            .map(|[line, col, len]| BlankSlot { line, col, len })
            .collect();
        CodeContext::new(owner, raw.lines, blanks).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RawContext {
    owner: String,
    lines: Vec<String>,
    blanks: Vec<[usize; 3]>,
}

/// Five source lines around occurrences of `owner`. `lines` hold the original
/// text; `blanks` mark every occurrence of the owner that is hidden from
/// survey participants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeContext {
    pub owner: Identifier,
    pub lines: Vec<String>,
    pub blanks: Vec<BlankSlot>,
}

pub const CONTEXT_LINES: usize = 5;
pub const BLANK_MARKER: &str = "____";

impl CodeContext {
    pub fn new(owner: Identifier, lines: Vec<String>, mut blanks: Vec<BlankSlot>) -> Result<Self> {
        if lines.len() != CONTEXT_LINES {
            return Err(Error::Validation(format!(
                "context has {} lines, expected {CONTEXT_LINES}",
                lines.len()
            )));
        }
        if blanks.is_empty() {
            return Err(Error::Validation("context has no blanks".into()));
        }
        blanks.sort();
        for b in &blanks {
            let held = lines
                .get(b.line)
                .and_then(|l| l.get(b.col..b.col + b.len));
            if held != Some(owner.as_str()) {
                return Err(Error::Validation(format!(
                    "blank {b:?} does not hold {owner}"
                )));
            }
        }
        if blanks
            .windows(2)
            .any(|w| w[0].line == w[1].line && w[0].col + w[0].len > w[1].col)
        {
            return Err(Error::Validation("overlapping blanks".into()));
        }
        Ok(CodeContext {
            owner,
            lines,
            blanks,
        })
    }

    /// The lines with every blank replaced by `marker`.
    pub fn blanked(&self, marker: &str) -> Vec<String> {
        self.lines
            .iter()
            .enumerate()
            .map(|(i, line)| {
                let mut out = String::with_capacity(line.len());
                let mut pos = 0;
                for b in self.blanks.iter().filter(|b| b.line == i) {
                    out.push_str(&line[pos..b.col]);
                    out.push_str(marker);
                    pos = b.col + b.len;
                }
                out.push_str(&line[pos..]);
                out
            })
            .collect()
    }

    /// Inverse of [`CodeContext::blanked`]: substitutes `fill` back into the
    /// blanks of `blanked` lines rendered with `marker`.
    pub fn refill(&self, blanked: &[String], marker: &str, fill: &str) -> Vec<String> {
        blanked
            .iter()
            .enumerate()
            .map(|(i, line)| {
                let mut out = String::with_capacity(line.len());
                let mut rest = line.as_str();
                let mut consumed = 0;
                for b in self.blanks.iter().filter(|b| b.line == i) {
                    // Offsets in the original shift by (len - marker.len()) per earlier blank.
                    let start = b.col - consumed;
                    out.push_str(&rest[..start]);
                    out.push_str(fill);
                    rest = &rest[start + marker.len()..];
                    consumed = b.col + b.len;
                }
                out.push_str(rest);
                out
            })
            .collect()
    }
}

pub fn format_score(v: f64) -> String {
    format!("{v:.6}")
}

fn csv_reader<R: Read>(input: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .trim(csv::Trim::All)
        .from_reader(input)
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
    Error::parse(line, e.to_string())
}

fn column(headers: &csv::StringRecord, name: &str) -> Option<usize> {
    headers.iter().position(|h| h.eq_ignore_ascii_case(name))
}

fn parse_unit(line: usize, name: &str, field: &str) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| Error::parse(line, format!("{name}: not a number: {field:?}")))?;
    check_unit(name, v).map_err(|e| match e {
        Error::Validation(m) => Error::Validation(format!("line {line}: {m}")),
        e => e,
    })?;
    Ok(v)
}

/// Reads a benchmark CSV.
///
/// Columns are located by header name, so files that order the columns
/// differently or carry extra columns (for example per-technique scores) are
/// accepted too. An empty or `nan` contextual column means "no contextual
/// score".
pub fn parse_benchmark_csv<R: Read>(input: R) -> Result<Benchmark> {
    let mut rdr = csv_reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let need = |name: &str| {
        column(&headers, name)
            .ok_or_else(|| Error::parse(1, format!("missing column {name:?} in header")))
    };
    let (c1, c2) = (need("id1")?, need("id2")?);
    let (crel, csim) = (need("relatedness")?, need("similarity")?);
    let cctx = column(&headers, "contextual_similarity");

    let mut scores = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let pair = IdentifierPair::from_strs(&rec[c1], &rec[c2])
            .map_err(|e| Error::parse(line, e.to_string()))?;
        let contextual = match cctx.map(|c| &rec[c]) {
            None | Some("") => None,
            Some(s) if s.eq_ignore_ascii_case("nan") => None,
            Some(s) => Some(parse_unit(line, "contextual_similarity", s)?),
        };
        scores.push(GoldScore {
            pair,
            relatedness: parse_unit(line, "relatedness", &rec[crel])?,
            similarity: parse_unit(line, "similarity", &rec[csim])?,
            contextual_similarity: contextual,
        });
    }
    Benchmark::new(scores)
}

pub fn write_benchmark_csv<W: Write>(bench: &Benchmark, mut out: W) -> Result<()> {
    writeln!(out, "{BENCHMARK_HEADER}")?;
    for g in &bench.scores {
        let ctx = g.contextual_similarity.map(format_score).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{}",
            g.pair.id1,
            g.pair.id2,
            format_score(g.relatedness),
            format_score(g.similarity),
            ctx
        )?;
    }
    Ok(())
}

fn check_header(headers: &csv::StringRecord, expected: &str) -> Result<()> {
    let found: Vec<&str> = headers.iter().collect();
    let want: Vec<&str> = expected.split(',').collect();
    if found != want {
        return Err(Error::parse(
            1,
            format!("expected header `{expected}`, found `{}`", found.join(",")),
        ));
    }
    Ok(())
}

fn rating_pair(line: usize, rec: &csv::StringRecord) -> Result<(String, IdentifierPair)> {
    let participant = rec[0].to_owned();
    if participant.is_empty() {
        return Err(Error::parse(line, "empty participant"));
    }
    let id1 = Identifier::new(&rec[2]).map_err(|e| Error::parse(line, e.to_string()))?;
    let id2 = Identifier::new(&rec[3]).map_err(|e| Error::parse(line, e.to_string()))?;
    let pair_id = if rec[1].is_empty() {
        PairId::canonical(&id1, &id2)
    } else {
        PairId(rec[1].to_owned())
    };
    let pair =
        IdentifierPair::with_key(id1, id2, pair_id).map_err(|e| Error::parse(line, e.to_string()))?;
    Ok((participant, pair))
}

fn likert_field(line: usize, name: &str, field: &str) -> Result<Likert> {
    let v: u8 = field
        .parse()
        .map_err(|_| Error::parse(line, format!("{name}: not an integer: {field:?}")))?;
    Likert::new(v).map_err(|e| Error::Validation(format!("line {line}: {name}: {e}")))
}

pub fn parse_direct_ratings<R: Read>(input: R) -> Result<Vec<DirectRating>> {
    let mut rdr = csv_reader(input);
    check_header(rdr.headers().map_err(csv_error)?, DIRECT_HEADER)?;
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let (participant, pair) = rating_pair(line, &rec)?;
        out.push(DirectRating {
            participant,
            pair,
            relatedness: likert_field(line, "relatedness", &rec[4])?,
            similarity: likert_field(line, "similarity", &rec[5])?,
        });
    }
    Ok(out)
}

pub fn parse_indirect_ratings<R: Read>(input: R) -> Result<Vec<IndirectRating>> {
    let mut rdr = csv_reader(input);
    check_header(rdr.headers().map_err(csv_error)?, INDIRECT_HEADER)?;
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let (participant, pair) = rating_pair(line, &rec)?;
        let choice = |name: &str, s: &str| -> Result<Choice> {
            s.parse()
                .map_err(|e: Error| Error::Validation(format!("line {line}: {name}: {e}")))
        };
        out.push(IndirectRating {
            participant,
            pair,
            context_owner: choice("context_owner", &rec[4])?,
            chosen: choice("chosen", &rec[5])?,
        });
    }
    Ok(out)
}

pub fn parse_ratings<R: Read>(input: R, kind: RatingKind) -> Result<Ratings> {
    Ok(match kind {
        RatingKind::Direct => Ratings::Direct(parse_direct_ratings(input)?),
        RatingKind::Indirect => Ratings::Indirect(parse_indirect_ratings(input)?),
    })
}

pub fn write_direct_ratings<W: Write>(ratings: &[DirectRating], mut out: W) -> Result<()> {
    writeln!(out, "{DIRECT_HEADER}")?;
    for r in ratings {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.participant,
            r.pair.pair_id,
            r.pair.id1,
            r.pair.id2,
            r.relatedness.get(),
            r.similarity.get()
        )?;
    }
    Ok(())
}

pub fn write_indirect_ratings<W: Write>(ratings: &[IndirectRating], mut out: W) -> Result<()> {
    writeln!(out, "{INDIRECT_HEADER}")?;
    for r in ratings {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.participant,
            r.pair.pair_id,
            r.pair.id1,
            r.pair.id2,
            r.context_owner.as_str(),
            r.chosen.as_str()
        )?;
    }
    Ok(())
}

/// Reads a list of pairs: CSV with `id1,id2` columns (an optional
/// `pair_id` column overrides the canonical key).
pub fn parse_pairs_csv<R: Read>(input: R) -> Result<Vec<IdentifierPair>> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let c1 = column(&headers, "id1").ok_or_else(|| Error::parse(1, "missing column id1"))?;
    let c2 = column(&headers, "id2").ok_or_else(|| Error::parse(1, "missing column id2"))?;
    let ckey = column(&headers, "pair_id");
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        let field = |c: usize| {
            rec.get(c)
                .ok_or_else(|| Error::parse(line, format!("missing field {}", c + 1)))
        };
        let id1 = Identifier::new(field(c1)?).map_err(|e| Error::parse(line, e.to_string()))?;
        let id2 = Identifier::new(field(c2)?).map_err(|e| Error::parse(line, e.to_string()))?;
        let key = match ckey.and_then(|c| rec.get(c)) {
            Some(k) if !k.is_empty() => PairId(k.to_owned()),
            _ => PairId::canonical(&id1, &id2),
        };
        out.push(IdentifierPair::with_key(id1, id2, key).map_err(|e| Error::parse(line, e.to_string()))?);
    }
    Ok(out)
}

pub fn write_pairs_csv<W: Write>(pairs: &[IdentifierPair], mut out: W) -> Result<()> {
    writeln!(out, "pair_id,id1,id2")?;
    for p in pairs {
        writeln!(out, "{},{},{}", p.pair_id, p.id1, p.id2)?;
    }
    Ok(())
}

pub fn read_contexts_jsonl<R: BufRead>(input: R) -> Result<Vec<CodeContext>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let ctx: CodeContext =
            serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        out.push(ctx);
    }
    Ok(out)
}

pub fn write_contexts_jsonl<W: Write>(contexts: &[CodeContext], mut out: W) -> Result<()> {
    for c in contexts {
        serde_json::to_writer(&mut out, c)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bench_from(text: &str) -> Result<Benchmark> {
        parse_benchmark_csv(text.as_bytes())
    }

    #[test]
    fn parses_published_rows() {
        let b = bench_from(
            "id1,id2,relatedness,similarity,contextual_similarity\n\
             substr,substring,0.94,1.00,0.89\n\
             re,destruct,0.06,0.02,0.02\n",
        )
        .unwrap();
        assert_eq!(b.len(), 2);
        let g = &b.scores[0];
        assert_eq!(g.pair.id1.as_str(), "substr");
        assert_eq!((g.relatedness, g.similarity), (0.94, 1.00));
        assert_eq!(g.contextual_similarity, Some(0.89));
        assert_eq!(b.scores[1].contextual_similarity, Some(0.02));
        assert_eq!(b.scores[1].pair.pair_id.as_str(), "destruct|re");
    }

    #[test]
    fn empty_contextual_is_absent() {
        let b = bench_from(&format!("{BENCHMARK_HEADER}\nrows,columns,0.88,0.08,\n")).unwrap();
        assert_eq!(b.scores[0].contextual_similarity, None);
    }

    #[test]
    fn columns_are_found_by_name() {
        let b = bench_from(
            "id1,id2,similarity,relatedness,contextual_similarity,LV\n\
             count,total,0.81,0.83,0.79,0.2\n",
        )
        .unwrap();
        assert_eq!(b.scores[0].relatedness, 0.83);
        assert_eq!(b.scores[0].similarity, 0.81);
    }

    #[test]
    fn malformed_row_reports_line() {
        let err = bench_from(&format!("{BENCHMARK_HEADER}\na,b,0.1,0.2,0.3\nc,d,0.1\n")).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("unexpected {e:?}"),
        }
        let err = bench_from(&format!("{BENCHMARK_HEADER}\na,b,x,0.2,0.3\n")).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
    }

    #[test]
    fn out_of_range_score_is_rejected() {
        let err = bench_from(&format!("{BENCHMARK_HEADER}\na,b,1.2,0.2,0.3\n")).unwrap_err();
        assert!(matches!(err, Error::Validation(_)), "{err:?}");
    }

    #[test]
    fn writer_emits_header_and_rows() {
        let mut out = Vec::new();
        write_benchmark_csv(&Benchmark::default(), &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), format!("{BENCHMARK_HEADER}\n"));

        let b = bench_from(&format!("{BENCHMARK_HEADER}\nminy,ypos,0.68,0.37,\n")).unwrap();
        let mut out = Vec::new();
        write_benchmark_csv(&b, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            format!("{BENCHMARK_HEADER}\nminy,ypos,0.680000,0.370000,\n")
        );
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn direct_and_indirect_rows() {
        let d = parse_direct_ratings(format!("{DIRECT_HEADER}\np1,P007,radians,angle,5,4\n").as_bytes())
            .unwrap();
        assert_eq!(d[0].relatedness.get(), 5);
        assert_eq!(d[0].similarity.get(), 4);
        assert_eq!(d[0].pair.pair_id.as_str(), "P007");
        assert_eq!(d[0].participant, "p1");

        let i = parse_indirect_ratings(
            format!("{INDIRECT_HEADER}\np2,P007,radians,angle,id1,id2\n").as_bytes(),
        )
        .unwrap();
        assert_eq!(i[0].context_owner, Choice::Id1);
        assert_eq!(i[0].chosen, Choice::Id2);

        let err =
            parse_direct_ratings(format!("{DIRECT_HEADER}\np1,P007,radians,angle,6,4\n").as_bytes())
                .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
        let err = parse_indirect_ratings(
            format!("{INDIRECT_HEADER}\np2,P007,radians,angle,id1,id3\n").as_bytes(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Validation(_)));
    }

    #[test]
    fn identifier_grammar() {
        assert!(Identifier::new("$el").is_ok());
        assert!(Identifier::new("_x9").is_ok());
        assert!(Identifier::new("9x").is_err());
        assert!(Identifier::new("a b").is_err());
        assert!(Identifier::new("").is_err());
        assert!(IdentifierPair::from_strs("a", "a").is_err());
    }

    #[test]
    fn likert_unit_scale() {
        assert_eq!(Likert::new(1).unwrap().unit(), 0.0);
        assert_eq!(Likert::new(4).unwrap().unit(), 0.75);
        assert_eq!(Likert::new(5).unwrap().unit(), 1.0);
        assert!(Likert::new(0).is_err());
    }

    #[test]
    fn context_blank_and_refill() {
        let lines: Vec<String> = ["var len = 0;", "len += a.len;", "x", "", "f(len)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let blanks = vec![
            BlankSlot { line: 0, col: 4, len: 3 },
            BlankSlot { line: 1, col: 0, len: 3 },
            BlankSlot { line: 1, col: 9, len: 3 },
            BlankSlot { line: 4, col: 2, len: 3 },
        ];
        let ctx = CodeContext::new(Identifier::new("len").unwrap(), lines.clone(), blanks).unwrap();
        let shown = ctx.blanked(BLANK_MARKER);
        assert_eq!(shown[1], "____ += a.____;");
        assert_eq!(ctx.refill(&shown, BLANK_MARKER, "len"), lines);

        let json = serde_json::to_string(&ctx).unwrap();
        assert!(json.contains("\"blanks\":[[0,4,3]"));
        let back: CodeContext = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ctx);
    }

    #[test]
    fn context_rejects_wrong_blank() {
        let lines = vec!["a".to_string(), "b".into(), "c".into(), "d".into(), "e".into()];
        let owner = Identifier::new("a").unwrap();
        assert!(CodeContext::new(owner.clone(), lines.clone(), vec![]).is_err());
        assert!(CodeContext::new(owner.clone(), lines[..4].to_vec(), vec![]).is_err());
        let bad = vec![BlankSlot { line: 1, col: 0, len: 1 }];
        assert!(CodeContext::new(owner, lines, bad).is_err());
    }
}
