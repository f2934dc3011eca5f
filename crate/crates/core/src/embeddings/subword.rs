//! Character n-grams of boundary-marked words.

use std::collections::HashMap;

pub const BOW: char = '<';
pub const EOW: char = '>';

pub const DEFAULT_NGRAM_RANGE: (usize, usize) = (3, 6);

/// All character n-grams of `<word>` with lengths in `min_n..=max_n`, in
/// order of start position, then length.
pub fn char_ngrams(word: &str, min_n: usize, max_n: usize) -> Vec<String> {
    let chars: Vec<char> = std::iter::once(BOW)
        .chain(word.chars())
        .chain(std::iter::once(EOW))
        .collect();
    let mut out = Vec::new();
    for start in 0..chars.len() {
        for n in min_n..=max_n {
            let end = start + n;
            if end > chars.len() {
                break;
            }
            out.push(chars[start..end].iter().collect());
        }
    }
    out
}

/// 32-bit FNV-1a over the UTF-8 bytes of `s`.
pub fn fnv1a(s: &str) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    for b in s.bytes() {
        h ^= u32::from(b);
        h = h.wrapping_mul(0x0100_0193);
    }
    h
}

/// How n-gram strings map to rows of the n-gram matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum NgramIndex {
    /// One row per known n-gram.
    Explicit(HashMap<String, usize>),
    /// `fnv1a(ngram) mod buckets`; every n-gram resolves to some row.
    Hashed { buckets: usize },
}

impl NgramIndex {
    pub fn lookup(&self, ngram: &str) -> Option<usize> {
        match self {
            NgramIndex::Explicit(map) => map.get(ngram).copied(),
            NgramIndex::Hashed { buckets } => Some(fnv1a(ngram) as usize % buckets),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            NgramIndex::Explicit(map) => map.len(),
            NgramIndex::Hashed { buckets } => *buckets,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ngrams_of_short_word() {
        assert_eq!(char_ngrams("len", 3, 3), vec!["<le", "len", "en>"]);
        let all = char_ngrams("ab", 3, 6);
        assert_eq!(all, vec!["<ab", "<ab>", "ab>"]);
        assert!(char_ngrams("a", 4, 6).is_empty());
    }

    #[test]
    fn fnv_reference_values() {
        // Published FNV-1a 32-bit test vectors.
        assert_eq!(fnv1a(""), 0x811c_9dc5);
        assert_eq!(fnv1a("a"), 0xe40c_292c);
        assert_eq!(fnv1a("foobar"), 0xbf9c_f968);
    }
}
