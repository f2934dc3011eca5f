//! Word vectors: storage, text I/O, cosine similarity, subword composition
//! for out-of-vocabulary tokens, nearest neighbours, and a trainer.

pub mod subword;
pub mod train;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::io::{BufRead, Write};

pub use subword::{char_ngrams, NgramIndex, DEFAULT_NGRAM_RANGE};
pub use train::{train, Mode, TrainConfig};

use crate::error::{Error, Result};
use crate::model::IdentifierPair;

/// Dense token vectors with optional character n-gram vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingStore {
    dim: usize,
    tokens: Vec<String>,
    index: HashMap<String, usize>,
    vectors: Vec<f64>,
    ngrams: Option<NgramTable>,
}

#[derive(Debug, Clone, PartialEq)]
struct NgramTable {
    range: (usize, usize),
    index: NgramIndex,
    vectors: Vec<f64>,
}

impl EmbeddingStore {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Validation("embedding dimension must be positive".into()));
        }
        Ok(EmbeddingStore {
            dim,
            tokens: Vec::new(),
            index: HashMap::new(),
            vectors: Vec::new(),
            ngrams: None,
        })
    }

    pub fn from_pairs<I, S>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: Into<String>,
    {
        let mut store = EmbeddingStore::new(dim)?;
        for (token, v) in entries {
            store.insert(token.into(), &v)?;
        }
        Ok(store)
    }

    pub fn insert(&mut self, token: String, vector: &[f64]) -> Result<()> {
        if vector.len() != self.dim {
            return Err(Error::Validation(format!(
                "vector for {token:?} has length {}, expected {}",
                vector.len(),
                self.dim
            )));
        }
        if self.index.contains_key(&token) {
            return Err(Error::Validation(format!("duplicate token {token:?}")));
        }
        self.index.insert(token.clone(), self.tokens.len());
        self.tokens.push(token);
        self.vectors.extend_from_slice(vector);
        Ok(())
    }

    /// Attaches explicit n-gram vectors.
    pub fn set_ngrams<I, S>(&mut self, range: (usize, usize), entries: I) -> Result<()>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: Into<String>,
    {
        check_range(range)?;
        let mut index = HashMap::new();
        let mut vectors = Vec::new();
        for (ngram, v) in entries {
            let ngram = ngram.into();
            if v.len() != self.dim {
                return Err(Error::Validation(format!(
                    "n-gram {ngram:?} has length {}, expected {}",
                    v.len(),
                    self.dim
                )));
            }
            let row = index.len();
            if index.insert(ngram.clone(), row).is_some() {
                return Err(Error::Validation(format!("duplicate n-gram {ngram:?}")));
            }
            vectors.extend_from_slice(&v);
        }
        self.ngrams = Some(NgramTable {
            range,
            index: NgramIndex::Explicit(index),
            vectors,
        });
        Ok(())
    }

    /// Attaches a hashed n-gram matrix of `buckets` rows (row-major).
    pub fn set_hashed_ngrams(
        &mut self,
        range: (usize, usize),
        buckets: usize,
        matrix: Vec<f64>,
    ) -> Result<()> {
        check_range(range)?;
        if buckets == 0 || matrix.len() != buckets * self.dim {
            return Err(Error::Validation(format!(
                "hashed n-gram matrix must have {buckets} x {} entries",
                self.dim
            )));
        }
        self.ngrams = Some(NgramTable {
            range,
            index: NgramIndex::Hashed { buckets },
            vectors: matrix,
        });
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn contains(&self, token: &str) -> bool {
        self.index.contains_key(token)
    }

    pub fn ngram_range(&self) -> Option<(usize, usize)> {
        self.ngrams.as_ref().map(|t| t.range)
    }

    pub fn has_ngrams(&self) -> bool {
        self.ngrams.is_some()
    }

    /// Stored vector of an in-vocabulary token.
    pub fn word_vector(&self, token: &str) -> Option<&[f64]> {
        self.index.get(token).map(|&i| self.row(i))
    }

    fn row(&self, i: usize) -> &[f64] {
        &self.vectors[i * self.dim..(i + 1) * self.dim]
    }

    pub fn ngram_vector(&self, ngram: &str) -> Option<&[f64]> {
        let t = self.ngrams.as_ref()?;
        let row = t.index.lookup(ngram)?;
        Some(&t.vectors[row * self.dim..(row + 1) * self.dim])
    }

    /// The token's own vector, or the sum of its known n-gram vectors.
    pub fn vector_for(&self, token: &str) -> Result<Vec<f64>> {
        if token.is_empty() {
            return Err(Error::Validation("empty token".into()));
        }
        if let Some(v) = self.word_vector(token) {
            return Ok(v.to_vec());
        }
        if let Some(t) = &self.ngrams {
            let mut sum = vec![0.0; self.dim];
            let mut found = false;
            for g in char_ngrams(token, t.range.0, t.range.1) {
                if let Some(v) = self.ngram_vector(&g) {
                    found = true;
                    sum.iter_mut().zip(v).for_each(|(s, x)| *s += x);
                }
            }
            if found {
                return Ok(sum);
            }
        }
        Err(Error::OutOfVocabulary(token.to_owned()))
    }

    pub fn similarity(&self, a: &str, b: &str) -> Result<f64> {
        cosine(&self.vector_for(a)?, &self.vector_for(b)?)
    }

    /// Top-`k` vocabulary tokens by cosine to `token`, excluding the token
    /// itself. Ties are broken by token order.
    pub fn nearest_neighbors(&self, token: &str, k: usize) -> Result<Vec<(String, f64)>> {
        let query = self.vector_for(token)?;
        let qn = norm(&query);
        if qn == 0.0 {
            return Err(Error::UndefinedSimilarity(format!("{token:?} has a zero vector")));
        }
        let candidates = self.tokens.iter().filter(|t| t.as_str() != token).count();
        if k == 0 || k > candidates {
            return Err(Error::Validation(format!(
                "k = {k} must lie in 1..={candidates}"
            )));
        }
        let mut scored: Vec<(&str, f64)> = self
            .tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.as_str() != token)
            .map(|(i, t)| {
                let v = self.row(i);
                let n = norm(v);
                let c = if n == 0.0 { f64::NEG_INFINITY } else { dot(&query, v) / (qn * n) };
                (t.as_str(), c)
            })
            .collect();
        scored.sort_by(|a, b| {
            b.1.partial_cmp(&a.1)
                .unwrap_or(Ordering::Equal)
                .then_with(|| a.0.cmp(b.0))
        });
        Ok(scored
            .into_iter()
            .take(k)
            .map(|(t, c)| (t.to_owned(), c))
            .collect())
    }

    /// Cosine per pair; `None` where either side cannot be resolved.
    pub fn score_pairs(&self, pairs: &[IdentifierPair]) -> Vec<Option<f64>> {
        pairs
            .iter()
            .map(|p| self.similarity(p.id1.as_str(), p.id2.as_str()).ok())
            .collect()
    }
}

fn check_range((min_n, max_n): (usize, usize)) -> Result<()> {
    if min_n == 0 || min_n > max_n {
        return Err(Error::Validation(format!(
            "invalid n-gram range {min_n}..={max_n}"
        )));
    }
    Ok(())
}

pub fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn norm(u: &[f64]) -> f64 {
    dot(u, u).sqrt()
}

pub fn cosine(u: &[f64], v: &[f64]) -> Result<f64> {
    if u.len() != v.len() {
        return Err(Error::Validation(format!(
            "dimension mismatch: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    let (nu, nv) = (norm(u), norm(v));
    if nu == 0.0 || nv == 0.0 {
        return Err(Error::UndefinedSimilarity("zero vector".into()));
    }
    Ok((dot(u, v) / (nu * nv)).clamp(-1.0, 1.0))
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut num = |what: &str| -> Result<usize> {
        it.next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(1, format!("header must be `<count> <dim>`: missing {what}")))
    };
    let (count, dim) = (num("count")?, num("dim")?);
    if dim == 0 {
        return Err(Error::parse(1, "dimension must be positive"));
    }
    Ok((count, dim))
}

fn read_rows<R: BufRead>(input: R) -> Result<(usize, Vec<(String, Vec<f64>)>)> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty vector file"))??;
    let (count, dim) = parse_header(&header)?;
    let mut rows = Vec::with_capacity(count);
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut parts = line.split_ascii_whitespace();
        let token = parts.next().unwrap_or_default().to_owned();
        let values: Vec<f64> = parts
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::parse(line_no, format!("bad number: {e}")))?;
        if values.len() != dim {
            return Err(Error::parse(
                line_no,
                format!("expected {dim} values for {token:?}, found {}", values.len()),
            ));
        }
        rows.push((token, values));
    }
    if rows.len() != count {
        return Err(Error::parse(
            rows.len() + 2,
            format!("header announces {count} vectors, found {}", rows.len()),
        ));
    }
    Ok((dim, rows))
}

/// Reads word2vec text format: a `count dim` header, then one
/// `token v1 .. vdim` line per token.
pub fn load_vectors<R: BufRead>(input: R) -> Result<EmbeddingStore> {
    let (dim, rows) = read_rows(input)?;
    EmbeddingStore::from_pairs(dim, rows)
}

/// Reads n-gram vectors (same text format) into `store`.
pub fn load_ngram_vectors<R: BufRead>(
    store: &mut EmbeddingStore,
    range: (usize, usize),
    input: R,
) -> Result<()> {
    let (dim, rows) = read_rows(input)?;
    if dim != store.dim() {
        return Err(Error::Validation(format!(
            "n-gram dimension {dim} differs from word dimension {}",
            store.dim()
        )));
    }
    store.set_ngrams(range, rows)
}

/// Reads n-gram vectors written by [`write_ngram_vectors`] without knowing
/// the n-gram range: it is taken from the shortest and longest n-gram in
/// the file. Lookups only ever hit n-grams in the table, so this gives the
/// same vectors as the original range.
pub fn load_ngram_vectors_inferred<R: BufRead>(store: &mut EmbeddingStore, input: R) -> Result<()> {
    let (dim, rows) = read_rows(input)?;
    if dim != store.dim() {
        return Err(Error::Validation(format!(
            "n-gram dimension {dim} differs from word dimension {}",
            store.dim()
        )));
    }
    let lens = rows.iter().map(|(g, _)| g.chars().count());
    let range = match (lens.clone().min(), lens.max()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::Validation("empty n-gram file".into())),
    };
    store.set_ngrams(range, rows)
}

fn write_rows<'a, W, I>(mut out: W, dim: usize, count: usize, rows: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = (&'a str, &'a [f64])>,
{
    writeln!(out, "{count} {dim}")?;
    for (token, v) in rows {
        write!(out, "{token}")?;
        for x in v {
            // `{}` prints the shortest string that parses back to the same f64.
            write!(out, " {x}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn write_vectors<W: Write>(store: &EmbeddingStore, out: W) -> Result<()> {
    write_rows(
        out,
        store.dim,
        store.len(),
        store
            .tokens
            .iter()
            .enumerate()
            .map(|(i, t)| (t.as_str(), store.row(i))),
    )
}

/// Writes explicit n-gram vectors; a store without them (or with hashed
/// n-grams) writes nothing and returns `false`.
pub fn write_ngram_vectors<W: Write>(store: &EmbeddingStore, out: W) -> Result<bool> {
    let Some(NgramTable {
        index: NgramIndex::Explicit(map),
        vectors,
        ..
    }) = &store.ngrams
    else {
        return Ok(false);
    };
    let mut grams: Vec<(&str, usize)> = map.iter().map(|(g, &r)| (g.as_str(), r)).collect();
    grams.sort_by_key(|&(_, r)| r);
    let dim = store.dim;
    write_rows(
        out,
        dim,
        grams.len(),
        grams
            .into_iter()
            .map(|(g, r)| (g, &vectors[r * dim..(r + 1) * dim])),
    )?;
    Ok(true)
}
