//! Slow, obviously-correct reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

/// Plain exponential recursion over the three edit operations.
pub fn levenshtein_recursive(a: &[char], b: &[char]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let cost = usize::from(a[0] != b[0]);
    (levenshtein_recursive(&a[1..], &b[1..]) + cost)
        .min(levenshtein_recursive(&a[1..], b) + 1)
        .min(levenshtein_recursive(a, &b[1..]) + 1)
}

#[derive(Clone, Copy, Debug)]
pub enum Col {
    Pair(char, char),
    GapInB(char),
    GapInA(char),
}

/// Every global alignment of `a` and `b`, as explicit column lists.
pub fn all_alignments(a: &[char], b: &[char]) -> Vec<Vec<Col>> {
    if a.is_empty() && b.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if !a.is_empty() && !b.is_empty() {
        for mut rest in all_alignments(&a[1..], &b[1..]) {
            rest.insert(0, Col::Pair(a[0], b[0]));
            out.push(rest);
        }
    }
    if !a.is_empty() {
        for mut rest in all_alignments(&a[1..], b) {
            rest.insert(0, Col::GapInB(a[0]));
            out.push(rest);
        }
    }
    if !b.is_empty() {
        for mut rest in all_alignments(a, &b[1..]) {
            rest.insert(0, Col::GapInA(b[0]));
            out.push(rest);
        }
    }
    out
}

/// Best alignment score by scoring each alignment separately.
pub fn nw_exhaustive(a: &str, b: &str, matched: f64, mismatch: f64, gap: f64) -> f64 {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    all_alignments(&a, &b)
        .iter()
        .map(|al| {
            al.iter()
                .map(|c| match c {
                    Col::Pair(x, y) if x == y => matched,
                    Col::Pair(..) => mismatch,
                    _ => gap,
                })
                .sum::<f64>()
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Rank of each value: 1 + number strictly smaller + half the other ties.
pub fn brute_ranks(v: &[f64]) -> Vec<f64> {
    v.iter()
        .map(|x| {
            let less = v.iter().filter(|y| *y < x).count() as f64;
            let equal = v.iter().filter(|y| *y == x).count() as f64;
            less + (equal + 1.0) / 2.0
        })
        .collect()
}

pub fn brute_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let sxx: f64 = x.iter().map(|a| a * a).sum();
    let syy: f64 = y.iter().map(|b| b * b).sum();
    (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt())
}

pub fn brute_spearman(x: &[f64], y: &[f64]) -> f64 {
    brute_pearson(&brute_ranks(x), &brute_ranks(y))
}

/// Krippendorff's alpha (interval) via the coincidence matrix.
/// `table[rater][unit]`; units with fewer than two values are ignored.
pub fn alpha_coincidence(table: &[Vec<Option<f64>>]) -> Option<f64> {
    let n_units = table.iter().map(Vec::len).max().unwrap_or(0);
    // Values as integer keys (x1000) so they can index a map.
    let key = |v: f64| (v * 1000.0).round() as i64;
    let mut o: BTreeMap<(i64, i64), f64> = BTreeMap::new();
    for u in 0..n_units {
        let vals: Vec<f64> = table.iter().filter_map(|r| r.get(u).copied().flatten()).collect();
        let m = vals.len();
        if m < 2 {
            continue;
        }
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    *o.entry((key(vals[i]), key(vals[j]))).or_default() += 1.0 / (m as f64 - 1.0);
                }
            }
        }
    }
    let mut n_c: BTreeMap<i64, f64> = BTreeMap::new();
    for (&(c, _), &w) in &o {
        *n_c.entry(c).or_default() += w;
    }
    let n: f64 = n_c.values().sum();
    let delta = |c: i64, k: i64| {
        let d = (c - k) as f64 / 1000.0;
        d * d
    };
    let observed: f64 = o.iter().map(|(&(c, k), &w)| w * delta(c, k)).sum();
    let mut expected = 0.0;
    for (&c, &nc) in &n_c {
        for (&k, &nk) in &n_c {
            expected += nc * nk * delta(c, k);
        }
    }
    if n < 2.0 || expected == 0.0 {
        return None;
    }
    Some(1.0 - (n - 1.0) * observed / expected)
}

/// Negative-sampling loss for one example: positive output first.
pub fn ns_loss(hidden: &[f64], outputs: &[Vec<f64>]) -> f64 {
    let dot = |o: &[f64]| hidden.iter().zip(o).map(|(a, b)| a * b).sum::<f64>();
    let log_sigmoid = |x: f64| -(1.0 + (-x).exp()).ln();
    let mut loss = -log_sigmoid(dot(&outputs[0]));
    for o in &outputs[1..] {
        loss -= log_sigmoid(-dot(o));
    }
    loss
}
