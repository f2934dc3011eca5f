//! Synthetic survey cohorts with a latent truth per pair.
#![allow(dead_code)]

use idbench_core::model::{Choice, DirectRating, IdentifierPair, IndirectRating, Likert};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn pair(i: usize) -> IdentifierPair {
    IdentifierPair::from_strs(&format!("left{i}"), &format!("right{i}")).unwrap()
}

fn likert(x: f64) -> Likert {
    Likert::new((1.0 + 4.0 * x.clamp(0.0, 1.0)).round() as u8).unwrap()
}

pub struct Cohort {
    pub direct: Vec<DirectRating>,
    pub indirect: Vec<IndirectRating>,
}

/// `good` raters answer truth plus noise, `bad` raters answer uniformly at
/// random. Each rater sees `per_rater` of the `pairs` pairs.
pub fn random_cohort(seed: u64, pairs: usize, good: usize, bad: usize, per_rater: usize) -> Cohort {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let truth: Vec<(f64, f64)> = (0..pairs)
        .map(|_| {
            let rel: f64 = rng.gen();
            (rel, rel * rng.gen::<f64>())
        })
        .collect();
    // Per-pair quality of the code contexts: poor contexts make choices noisy.
    let ctx_quality: Vec<f64> = (0..pairs).map(|_| rng.gen()).collect();
    let mut direct = Vec::new();
    let mut indirect = Vec::new();
    let ids: Vec<usize> = (0..pairs).collect();
    for r in 0..good + bad {
        let name = if r < good { format!("g{r:02}") } else { format!("b{r:02}") };
        let noise = rng.gen_range(0.05..0.2);
        for &i in ids.choose_multiple(&mut rng, per_rater) {
            let (rel, sim) = if r < good {
                (
                    truth[i].0 + rng.gen_range(-noise..noise) * 2.0,
                    truth[i].1 + rng.gen_range(-noise..noise) * 2.0,
                )
            } else {
                (rng.gen(), rng.gen())
            };
            direct.push(DirectRating {
                participant: name.clone(),
                pair: pair(i),
                relatedness: likert(rel),
                similarity: likert(sim),
            });
        }
        for &i in ids.choose_multiple(&mut rng, per_rater.min(pairs)) {
            let owner = if rng.gen() { Choice::Id1 } else { Choice::Id2 };
            // Similar pairs are hard to tell apart; good contexts help.
            let p_right = 0.5 + 0.5 * (1.0 - truth[i].1) * ctx_quality[i];
            let chosen = if rng.gen::<f64>() < p_right { owner } else { owner.other() };
            indirect.push(IndirectRating {
                participant: name.clone(),
                pair: pair(i),
                context_owner: owner,
                chosen,
            });
        }
    }
    Cohort { direct, indirect }
}

/// Two clusters of `per_cluster` tokens; each sentence draws all of its
/// tokens from one cluster. Returns the sentences and both token lists.
pub fn two_cluster_corpus(
    seed: u64,
    per_cluster: usize,
    total_tokens: usize,
    sentence_len: usize,
) -> (Vec<Vec<String>>, Vec<String>, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<String> = (0..per_cluster).map(|i| format!("alpha{i}")).collect();
    let b: Vec<String> = (0..per_cluster).map(|i| format!("beta{i}")).collect();
    let sentences = (0..total_tokens / sentence_len)
        .map(|_| {
            let words = if rng.gen() { &a } else { &b };
            (0..sentence_len).map(|_| words.choose(&mut rng).unwrap().clone()).collect()
        })
        .collect();
    (sentences, a, b)
}

/// Synthetic ensemble benchmark: `gold = mix(a, b) + N(0, sigma)`. With
/// `distractors` the other five score columns are uniform noise and the
/// identifiers vary in shape; without, all of those features are constant.
/// Returns rows, gold, a and b.
pub fn ensemble_data(
    seed: u64,
    n: usize,
    sigma: f64,
    distractors: bool,
    mix: impl Fn(f64, f64) -> f64,
) -> (Vec<idbench_core::ensemble::PairFeatures>, Vec<f64>, Vec<f64>, Vec<f64>) {
    use idbench_core::ensemble::{Dictionary, PairFeatures};
    use rand_distr::{Distribution, Normal};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, sigma).unwrap();
    let dict = Dictionary::new(["get", "set", "item", "count", "value", "name"]);
    let parts = ["get", "set", "item", "count", "value", "name", "xq", "zz"];
    let mut rows = Vec::with_capacity(n);
    let (mut gold, mut xa, mut xb) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..n {
        let (a, b): (f64, f64) = (rng.gen(), rng.gen());
        let mut scores = [None; 7];
        scores[0] = Some(a);
        scores[1] = Some(b);
        for s in scores.iter_mut().skip(2) {
            *s = Some(if distractors { rng.gen() } else { 0.5 });
        }
        let pair = if distractors {
            let p1 = parts.choose(&mut rng).unwrap();
            let p2 = parts.choose(&mut rng).unwrap();
            IdentifierPair::from_strs(&format!("{p1}{i}"), &format!("{p2}X{i}")).unwrap()
        } else {
            IdentifierPair::from_strs(&format!("item{i:04}"), &format!("value{i:04}")).unwrap()
        };
        rows.push(PairFeatures::new(pair, scores, &dict).unwrap());
        gold.push(mix(a, b) + noise.sample(&mut rng));
        xa.push(a);
        xb.push(b);
    }
    (rows, gold, xa, xb)
}
