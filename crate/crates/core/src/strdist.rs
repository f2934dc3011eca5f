//! Lexical similarity baselines: Levenshtein distance and Needleman-Wunsch
//! global alignment, both over raw (case-sensitive) identifier characters.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlignmentParams {
    pub match_score: f64,
    pub mismatch_penalty: f64,
    pub gap_penalty: f64,
}

impl Default for AlignmentParams {
    fn default() -> Self {
        AlignmentParams {
            match_score: 1.0,
            mismatch_penalty: -1.0,
            gap_penalty: -1.0,
        }
    }
}

impl AlignmentParams {
    pub fn validate(&self) -> Result<()> {
        if self.match_score <= self.mismatch_penalty || self.gap_penalty >= self.match_score {
            return Err(Error::Config(format!(
                "alignment scores must satisfy mismatch < match and gap < match: {self:?}"
            )));
        }
        Ok(())
    }
}

pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    // Single rolling row over b.
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let sub = diag + usize::from(ca != cb);
            diag = row[j + 1];
            row[j + 1] = sub.min(row[j] + 1).min(diag + 1);
        }
    }
    row[b.len()]
}

/// Optimal global alignment score; higher means more similar.
pub fn needleman_wunsch(a: &str, b: &str, params: &AlignmentParams) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let gap = params.gap_penalty;
    let mut row: Vec<f64> = (0..=b.len()).map(|j| j as f64 * gap).collect();
    for (i, ca) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = (i + 1) as f64 * gap;
        for (j, cb) in b.iter().enumerate() {
            let pair = if ca == cb {
                params.match_score
            } else {
                params.mismatch_penalty
            };
            let best = (diag + pair).max(row[j] + gap).max(row[j + 1] + gap);
            diag = row[j + 1];
            row[j + 1] = best;
        }
    }
    row[b.len()]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LexicalKind {
    Lv,
    Nw,
}

impl FromStr for LexicalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lv" | "levenshtein" => Ok(LexicalKind::Lv),
            "nw" | "needleman-wunsch" => Ok(LexicalKind::Nw),
            other => Err(Error::Validation(format!("unknown lexical kind {other:?}"))),
        }
    }
}

/// Similarity in [0, 1] with the default alignment parameters.
pub fn lexical_similarity(a: &str, b: &str, kind: LexicalKind) -> Result<f64> {
    lexical_similarity_with(a, b, kind, &AlignmentParams::default())
}

pub fn lexical_similarity_with(
    a: &str,
    b: &str,
    kind: LexicalKind,
    params: &AlignmentParams,
) -> Result<f64> {
    let (la, lb) = (a.chars().count(), b.chars().count());
    if la == 0 && lb == 0 {
        return Err(Error::UndefinedSimilarity("both strings are empty".into()));
    }
    let s = match kind {
        LexicalKind::Lv => 1.0 - levenshtein(a, b) as f64 / la.max(lb) as f64,
        LexicalKind::Nw => {
            let best = params.match_score * la.max(lb) as f64;
            let worst = params.gap_penalty * (la + lb) as f64;
            if best == worst {
                1.0
            } else {
                (needleman_wunsch(a, b, params) - worst) / (best - worst)
            }
        }
    };
    Ok(s.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levenshtein_examples() {
        assert_eq!(levenshtein("length", "length"), 0);
        assert_eq!(levenshtein("len", "length"), 3);
        assert_eq!(levenshtein("", "abc"), 3);
        assert_eq!(levenshtein("abc", ""), 3);
        assert_eq!(levenshtein("kitten", "sitting"), 3);
    }

    #[test]
    fn needleman_wunsch_examples() {
        let p = AlignmentParams::default();
        assert_eq!(needleman_wunsch("abc", "abc", &p), 3.0);
        assert_eq!(needleman_wunsch("len", "length", &p), 0.0);
        assert_eq!(needleman_wunsch("a", "b", &p), -1.0);
        assert_eq!(needleman_wunsch("", "ab", &p), -2.0);
    }

    #[test]
    fn similarity_examples() {
        assert_eq!(lexical_similarity("x", "x", LexicalKind::Lv).unwrap(), 1.0);
        assert_eq!(lexical_similarity("len", "length", LexicalKind::Lv).unwrap(), 0.5);
        assert_eq!(lexical_similarity("aaa", "bbb", LexicalKind::Lv).unwrap(), 0.0);
        assert_eq!(lexical_similarity("abc", "abc", LexicalKind::Nw).unwrap(), 1.0);
        // score 0, best 6, worst -9
        assert!((lexical_similarity("len", "length", LexicalKind::Nw).unwrap() - 0.6).abs() < 1e-12);
        assert!(matches!(
            lexical_similarity("", "", LexicalKind::Lv),
            Err(Error::UndefinedSimilarity(_))
        ));
        assert_eq!(lexical_similarity("", "a", LexicalKind::Nw).unwrap(), 0.0);
    }

    #[test]
    fn case_sensitive() {
        assert_eq!(levenshtein("Len", "len"), 1);
    }

    #[test]
    fn params_validation() {
        assert!(AlignmentParams::default().validate().is_ok());
        let bad = AlignmentParams {
            match_score: 1.0,
            mismatch_penalty: 2.0,
            gap_penalty: -1.0,
        };
        assert!(bad.validate().is_err());
    }
}
