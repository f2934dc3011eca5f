//! Inputs shared by the benchmarks.

use idbench_core::ensemble::{Dictionary, PairFeatures};
use idbench_core::model::IdentifierPair;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn words(n: usize, max_len: usize, seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| rng.gen_range(b'a'..=b'z') as char).collect()
        })
        .collect()
}

/// `raters` x `items` Likert table on the unit scale, 30% missing.
pub fn rating_table(raters: usize, items: usize, seed: u64) -> Vec<Vec<Option<f64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..raters)
        .map(|_| {
            (0..items)
                .map(|_| rng.gen_bool(0.7).then(|| f64::from(rng.gen_range(0u8..5)) / 4.0))
                .collect()
        })
        .collect()
}

pub fn vectors(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x = (0..n).map(|_| rng.gen()).collect();
    let y = (0..n).map(|_| rng.gen()).collect();
    (x, y)
}

pub fn sentences(vocab: usize, tokens: usize, seed: u64) -> Vec<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<String> = (0..vocab).map(|i| format!("w{i}")).collect();
    (0..tokens / 20)
        .map(|_| (0..20).map(|_| words.choose(&mut rng).unwrap().clone()).collect())
        .collect()
}

pub fn ensemble_rows(n: usize, seed: u64) -> (Vec<PairFeatures>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dict = Dictionary::new(["get", "set", "value"]);
    let mut rows = Vec::with_capacity(n);
    let mut targets = Vec::with_capacity(n);
    for i in 0..n {
        let mut scores = [None; 7];
        for s in &mut scores {
            *s = Some(rng.gen());
        }
        let pair = IdentifierPair::from_strs(&format!("getValue{i}"), &format!("set{i}")).unwrap();
        targets.push(0.7 * scores[0].unwrap() + 0.3 * scores[1].unwrap());
        rows.push(PairFeatures::new(pair, scores, &dict).unwrap());
    }
    (rows, targets)
}
