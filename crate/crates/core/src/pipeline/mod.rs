//! From raw survey ratings to gold-standard benchmarks.
//!
//! [`build_benchmark`] runs the cleaning steps in order: outlier
//! participants, downer participants, score aggregation (direct averages
//! and forced-choice conversion), and finally outlier pairs for the
//! contextual task.

mod alpha;
mod probit;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

pub use alpha::{alpha_from_units, krippendorff_alpha, RatingTable};
pub use probit::normal_quantile;

use crate::error::{Error, Result};
use crate::model::{
    Benchmark, DirectRating, GoldScore, IdentifierPair, IndirectRating, Likert, PairId,
    Thresholds, Variant,
};

/// Gaps within this distance of `theta` count as equal to it.
const THETA_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CleaningConfig {
    /// Outlier-participant threshold on the unit scale.
    pub tau: f64,
    /// Outlier-pair threshold.
    pub theta: f64,
    /// Relative agreement improvement that marks a downer.
    pub downer_gain: f64,
}

impl CleaningConfig {
    pub const DEFAULT_DOWNER_GAIN: f64 = 0.10;

    pub fn new(tau: f64, theta: f64, downer_gain: f64) -> Result<Self> {
        let cfg = CleaningConfig {
            tau,
            theta,
            downer_gain,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn for_variant(variant: Variant) -> Self {
        let Thresholds { tau, theta } = variant.thresholds();
        CleaningConfig {
            tau,
            theta,
            downer_gain: Self::DEFAULT_DOWNER_GAIN,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tau > 0.0) {
            return Err(Error::Config(format!("tau must be > 0, got {}", self.tau)));
        }
        if !(self.theta > 0.0 && self.theta <= 1.0) {
            return Err(Error::Config(format!(
                "theta must lie in (0, 1], got {}",
                self.theta
            )));
        }
        if !(self.downer_gain > 0.0) {
            return Err(Error::Config(format!(
                "downer gain must be > 0, got {}",
                self.downer_gain
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub ira_relatedness: f64,
    pub ira_similarity: f64,
    pub participants_removed_outlier: usize,
    pub participants_removed_downer: usize,
    pub pairs_removed: usize,
    pub removed_outliers: BTreeSet<String>,
    pub removed_downers: BTreeSet<String>,
    pub removed_pairs: BTreeSet<PairId>,
    pub pairs_relatedness: usize,
    pub pairs_similarity: usize,
    pub pairs_contextual: usize,
}

pub fn likert_to_unit(r: u8) -> Result<f64> {
    Ok(Likert::new(r)?.unit())
}

/// Mean unit-scaled relatedness and similarity per pair.
pub fn aggregate_direct(ratings: &[DirectRating]) -> BTreeMap<PairId, (f64, f64)> {
    let mut acc: BTreeMap<PairId, (f64, f64, usize)> = BTreeMap::new();
    for r in ratings {
        let e = acc.entry(r.pair.pair_id.clone()).or_default();
        e.0 += r.relatedness.unit();
        e.1 += r.similarity.unit();
        e.2 += 1;
    }
    acc.into_iter()
        .map(|(k, (rel, sim, n))| (k, (rel / n as f64, sim / n as f64)))
        .collect()
}

/// Relatedness and similarity tables (participants × pairs) of unit-scaled
/// ratings. Participants and pairs are indexed in sorted order.
pub fn direct_tables(ratings: &[DirectRating]) -> (RatingTable, RatingTable) {
    let participants: BTreeSet<&str> = ratings.iter().map(|r| r.participant.as_str()).collect();
    let pairs: BTreeSet<&PairId> = ratings.iter().map(|r| &r.pair.pair_id).collect();
    let p_idx: HashMap<&str, usize> = participants.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let i_idx: HashMap<&PairId, usize> = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut rel = vec![vec![None; pairs.len()]; participants.len()];
    let mut sim = rel.clone();
    for r in ratings {
        let (p, i) = (p_idx[r.participant.as_str()], i_idx[&r.pair.pair_id]);
        rel[p][i] = Some(r.relatedness.unit());
        sim[p][i] = Some(r.similarity.unit());
    }
    (RatingTable::new(rel), RatingTable::new(sim))
}

/// Relatedness and similarity alpha of a set of direct ratings.
pub fn direct_agreement(ratings: &[DirectRating]) -> Result<(f64, f64)> {
    let (rel, sim) = direct_tables(ratings);
    Ok((krippendorff_alpha(&rel)?, krippendorff_alpha(&sim)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Filtered {
    pub retained: Vec<DirectRating>,
    pub removed: BTreeSet<String>,
}

/// Mean absolute deviation of each participant from the leave-one-out mean
/// of the other ratings of the same pairs, averaged over relatedness and
/// similarity. Participants with no pair shared with anybody else are absent.
pub fn participant_deviations(ratings: &[DirectRating]) -> BTreeMap<String, f64> {
    // pair -> (sum rel, sum sim, count)
    let mut totals: HashMap<&PairId, (f64, f64, usize)> = HashMap::new();
    for r in ratings {
        let e = totals.entry(&r.pair.pair_id).or_default();
        e.0 += r.relatedness.unit();
        e.1 += r.similarity.unit();
        e.2 += 1;
    }
    // participant -> pair -> own (sum rel, sum sim, count)
    let mut own: BTreeMap<&str, BTreeMap<&PairId, (f64, f64, usize)>> = BTreeMap::new();
    for r in ratings {
        let e = own
            .entry(r.participant.as_str())
            .or_default()
            .entry(&r.pair.pair_id)
            .or_default();
        e.0 += r.relatedness.unit();
        e.1 += r.similarity.unit();
        e.2 += 1;
    }

    let mut out = BTreeMap::new();
    for (participant, pairs) in own {
        let (mut d_rel, mut d_sim, mut n) = (0.0, 0.0, 0usize);
        for (pair, (rel, sim, cnt)) in pairs {
            let (t_rel, t_sim, t_cnt) = totals[pair];
            let others = t_cnt - cnt;
            if others == 0 {
                continue;
            }
            let mean_rel = (t_rel - rel) / others as f64;
            let mean_sim = (t_sim - sim) / others as f64;
            d_rel += (rel / cnt as f64 - mean_rel).abs();
            d_sim += (sim / cnt as f64 - mean_sim).abs();
            n += 1;
        }
        if n > 0 {
            let n = n as f64;
            out.insert(participant.to_owned(), (d_rel / n + d_sim / n) / 2.0);
        }
    }
    out
}

pub fn remove_outlier_participants(ratings: &[DirectRating], tau: f64) -> Filtered {
    let removed: BTreeSet<String> = participant_deviations(ratings)
        .into_iter()
        .filter(|(_, dev)| *dev > tau)
        .map(|(p, _)| p)
        .collect();
    split(ratings, removed)
}

fn split(ratings: &[DirectRating], removed: BTreeSet<String>) -> Filtered {
    let retained = ratings
        .iter()
        .filter(|r| !removed.contains(&r.participant))
        .cloned()
        .collect();
    Filtered { retained, removed }
}

/// True when `after` improves on `before` by at least `gain` relative to
/// the magnitude of `before`.
fn improves(before: f64, after: f64, gain: f64) -> bool {
    after > before && after - before >= gain * before.abs()
}

/// Single pass over the cohort: each participant is judged by how much
/// agreement changes when only that participant is left out.
pub fn remove_downers(ratings: &[DirectRating], gain: f64) -> Result<Filtered> {
    let (rel, sim) = direct_tables(ratings);
    let base_rel = krippendorff_alpha(&rel)?;
    let base_sim = krippendorff_alpha(&sim)?;
    let participants: BTreeSet<&str> = ratings.iter().map(|r| r.participant.as_str()).collect();

    let without = |table: &RatingTable, skip: usize| {
        let rows = table
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, r)| r.clone())
            .collect();
        krippendorff_alpha(&RatingTable::new(rows))
    };

    let mut removed = BTreeSet::new();
    for (idx, participant) in participants.iter().enumerate() {
        let a_rel = without(&rel, idx).map_err(|e| {
            Error::UndefinedAgreement(format!("without participant {participant}: {e}"))
        })?;
        let a_sim = without(&sim, idx).map_err(|e| {
            Error::UndefinedAgreement(format!("without participant {participant}: {e}"))
        })?;
        if improves(base_rel, a_rel, gain) || improves(base_sim, a_sim, gain) {
            removed.insert((*participant).to_owned());
        }
    }
    Ok(split(ratings, removed))
}

/// Smoothed choice proportion `(x + 0.5) / (n + 1)` for `x` of `n` raters
/// picking the context's owner.
pub fn smoothed_proportion(x: usize, n: usize) -> f64 {
    (x as f64 + 0.5) / (n as f64 + 1.0)
}

/// Forced-choice distance per pair: `|Φ⁻¹(p̃)|`.
pub fn sdt_distances(indirect: &[IndirectRating]) -> BTreeMap<PairId, f64> {
    let mut counts: BTreeMap<PairId, (usize, usize)> = BTreeMap::new();
    for r in indirect {
        let e = counts.entry(r.pair.pair_id.clone()).or_default();
        e.1 += 1;
        if r.chosen == r.context_owner {
            e.0 += 1;
        }
    }
    counts
        .into_iter()
        .map(|(k, (x, n))| (k, normal_quantile(smoothed_proportion(x, n)).abs()))
        .collect()
}

/// Contextual similarity per pair: forced-choice distances min-max
/// normalized over the dataset and flipped, so the least decisive pair
/// scores 1 and the most decisive scores 0.
pub fn sdt_contextual_scores(indirect: &[IndirectRating]) -> BTreeMap<PairId, f64> {
    let dist = sdt_distances(indirect);
    let min = dist.values().copied().fold(f64::INFINITY, f64::min);
    let max = dist.values().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = max - min;
    dist.into_iter()
        .map(|(k, d)| {
            let s = if span > 0.0 { 1.0 - (d - min) / span } else { 1.0 };
            (k, s)
        })
        .collect()
}

/// Pairs whose direct and contextual similarity differ by at most `theta`.
pub fn remove_outlier_pairs(
    direct_sim: &BTreeMap<PairId, f64>,
    contextual: &BTreeMap<PairId, f64>,
    theta: f64,
) -> Result<BTreeSet<PairId>> {
    let keys: BTreeSet<&PairId> = direct_sim.keys().chain(contextual.keys()).collect();
    let mut retained = BTreeSet::new();
    for key in keys {
        let (Some(d), Some(c)) = (direct_sim.get(key), contextual.get(key)) else {
            return Err(Error::MissingData(format!(
                "pair {key} lacks a direct or contextual score"
            )));
        };
        if (d - c).abs() <= theta + THETA_SLACK {
            retained.insert(key.clone());
        }
    }
    Ok(retained)
}

/// Runs the full cleaning pipeline.
///
/// Ratings of removed participants are dropped from both surveys. Pairs
/// with direct ratings but no indirect ratings get no contextual score.
pub fn build_benchmark(
    direct: &[DirectRating],
    indirect: &[IndirectRating],
    cfg: &CleaningConfig,
) -> Result<(Benchmark, AgreementReport)> {
    cfg.validate()?;
    let outliers = remove_outlier_participants(direct, cfg.tau);
    let downers = remove_downers(&outliers.retained, cfg.downer_gain)?;
    let retained = downers.retained;

    let kept_indirect: Vec<IndirectRating> = indirect
        .iter()
        .filter(|r| {
            !outliers.removed.contains(&r.participant) && !downers.removed.contains(&r.participant)
        })
        .cloned()
        .collect();

    let direct_scores = aggregate_direct(&retained);
    let contextual_all = sdt_contextual_scores(&kept_indirect);
    let candidates: BTreeMap<PairId, f64> = direct_scores
        .iter()
        .filter(|(k, _)| contextual_all.contains_key(*k))
        .map(|(k, (_, sim))| (k.clone(), *sim))
        .collect();
    let contextual: BTreeMap<PairId, f64> = contextual_all
        .iter()
        .filter(|(k, _)| candidates.contains_key(*k))
        .map(|(k, v)| (k.clone(), *v))
        .collect();
    let kept_pairs = remove_outlier_pairs(&candidates, &contextual, cfg.theta)?;
    let removed_pairs: BTreeSet<PairId> = candidates
        .keys()
        .filter(|k| !kept_pairs.contains(*k))
        .cloned()
        .collect();

    // Pairs in order of first appearance in the retained ratings.
    let mut seen = BTreeSet::new();
    let order: Vec<&IdentifierPair> = retained
        .iter()
        .filter(|r| seen.insert(&r.pair.pair_id))
        .map(|r| &r.pair)
        .collect();
    let scores: Vec<GoldScore> = order
        .into_iter()
        .map(|pair| {
            let (rel, sim) = direct_scores[&pair.pair_id];
            let ctx = kept_pairs
                .contains(&pair.pair_id)
                .then(|| contextual[&pair.pair_id]);
            GoldScore {
                pair: pair.clone(),
                relatedness: rel,
                similarity: sim,
                contextual_similarity: ctx,
            }
        })
        .collect();

    let (ira_rel, ira_sim) = direct_agreement(&retained)?;
    let thresholds = Thresholds {
        tau: cfg.tau,
        theta: cfg.theta,
    };
    let mut bench = Benchmark::new(scores)?;
    bench.variant = Variant::from_thresholds(thresholds);
    bench.thresholds = Some(thresholds);

    let report = AgreementReport {
        ira_relatedness: ira_rel,
        ira_similarity: ira_sim,
        participants_removed_outlier: outliers.removed.len(),
        participants_removed_downer: downers.removed.len(),
        pairs_removed: removed_pairs.len(),
        pairs_relatedness: bench.len(),
        pairs_similarity: bench.len(),
        pairs_contextual: kept_pairs.len(),
        removed_outliers: outliers.removed,
        removed_downers: downers.removed,
        removed_pairs,
    };
    Ok((bench, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Choice, Identifier};

    fn pair(i: usize) -> IdentifierPair {
        IdentifierPair::new(
            Identifier::new(format!("a{i}")).unwrap(),
            Identifier::new(format!("b{i}")).unwrap(),
        )
        .unwrap()
    }

    fn direct(p: &str, pair_i: usize, rel: u8, sim: u8) -> DirectRating {
        DirectRating {
            participant: p.into(),
            pair: pair(pair_i),
            relatedness: Likert::new(rel).unwrap(),
            similarity: Likert::new(sim).unwrap(),
        }
    }

    fn indirect(p: &str, pair_i: usize, hit: bool) -> IndirectRating {
        IndirectRating {
            participant: p.into(),
            pair: pair(pair_i),
            context_owner: Choice::Id1,
            chosen: if hit { Choice::Id1 } else { Choice::Id2 },
        }
    }

    #[test]
    fn likert_scaling() {
        assert_eq!(likert_to_unit(1).unwrap(), 0.0);
        assert_eq!(likert_to_unit(5).unwrap(), 1.0);
        assert_eq!(likert_to_unit(4).unwrap(), 0.75);
        assert!(likert_to_unit(0).is_err());
        assert!(likert_to_unit(6).is_err());
    }

    #[test]
    fn aggregation_means() {
        let r = vec![direct("p1", 0, 5, 3), direct("p2", 0, 5, 1), direct("p3", 0, 4, 1)];
        let agg = aggregate_direct(&r);
        let (rel, _) = agg[&pair(0).pair_id];
        assert!((rel - 2.75 / 3.0).abs() < 1e-12);
        assert!((rel - 0.91667).abs() < 1e-5);
        assert_eq!(aggregate_direct(&r[..1])[&pair(0).pair_id].1, 0.5);
        assert_eq!(aggregate_direct(&[direct("p", 0, 1, 1)])[&pair(0).pair_id], (0.0, 0.0));
        assert!(aggregate_direct(&[]).is_empty());
    }

    #[test]
    fn conforming_participant_is_kept() {
        let r = vec![direct("p1", 0, 3, 3), direct("p2", 0, 3, 3), direct("p3", 0, 3, 3)];
        let out = remove_outlier_participants(&r, 1e-9);
        assert!(out.removed.is_empty());
        assert_eq!(out.retained.len(), 3);
    }

    #[test]
    fn maximal_deviation_is_removed() {
        let mut r = Vec::new();
        for i in 0..4 {
            for p in ["p1", "p2", "p3"] {
                r.push(direct(p, i, 1, 1));
            }
            r.push(direct("bad", i, 5, 5));
        }
        let dev = participant_deviations(&r);
        assert_eq!(dev["bad"], 1.0);
        let out = remove_outlier_participants(&r, 0.4);
        assert_eq!(out.removed, BTreeSet::from(["bad".to_string()]));
    }

    #[test]
    fn solo_pairs_are_skipped() {
        let r = vec![direct("p1", 0, 1, 1), direct("p2", 1, 5, 5)];
        assert!(participant_deviations(&r).is_empty());
        assert!(remove_outlier_participants(&r, 0.01).removed.is_empty());
    }

    #[test]
    fn identical_raters_are_not_downers() {
        let mut r = Vec::new();
        for i in 0..6 {
            for p in ["p1", "p2", "p3", "p4"] {
                r.push(direct(p, i, (i % 5 + 1) as u8, (i % 3 + 1) as u8));
            }
        }
        let out = remove_downers(&r, 0.10).unwrap();
        assert!(out.removed.is_empty());
        let out = remove_downers(&r, f64::INFINITY).unwrap();
        assert!(out.removed.is_empty());
    }

    #[test]
    fn sdt_midpoint_and_extremes() {
        let mut r = Vec::new();
        // pair 0: 2 of 4 pick the owner -> p = 0.5, d = 0
        for k in 0..4 {
            r.push(indirect(&format!("p{k}"), 0, k < 2));
        }
        // pair 1: 10 of 10 -> most decisive
        for k in 0..10 {
            r.push(indirect(&format!("p{k}"), 1, true));
        }
        // pair 2: 9 of 10
        for k in 0..10 {
            r.push(indirect(&format!("p{k}"), 2, k < 9));
        }
        let d = sdt_distances(&r);
        assert_eq!(d[&pair(0).pair_id], 0.0);
        let s = sdt_contextual_scores(&r);
        assert_eq!(s[&pair(0).pair_id], 1.0);
        assert_eq!(s[&pair(1).pair_id], 0.0);
        let mid = s[&pair(2).pair_id];
        assert!(mid > 0.0 && mid < 1.0);
    }

    #[test]
    fn sdt_constant_distance_maps_to_one() {
        let r = vec![indirect("p", 0, true), indirect("p", 1, true)];
        let s = sdt_contextual_scores(&r);
        assert!(s.values().all(|v| *v == 1.0));
    }

    #[test]
    fn outlier_pairs_threshold() {
        let k = pair(0).pair_id;
        let d = BTreeMap::from([(k.clone(), 0.37)]);
        let c = BTreeMap::from([(k.clone(), 0.02)]);
        assert!(remove_outlier_pairs(&d, &c, 0.4).unwrap().contains(&k));

        let d = BTreeMap::from([(k.clone(), 0.8)]);
        let c = BTreeMap::from([(k.clone(), 0.2)]);
        assert!(remove_outlier_pairs(&d, &c, 0.6).unwrap().contains(&k));

        let d = BTreeMap::from([(k.clone(), 0.75)]);
        let c = BTreeMap::from([(k.clone(), 0.2)]);
        assert!(remove_outlier_pairs(&d, &c, 0.5).unwrap().is_empty());
        assert!(remove_outlier_pairs(&d, &c, 0.6).unwrap().contains(&k));

        let err = remove_outlier_pairs(&d, &BTreeMap::new(), 0.5).unwrap_err();
        assert!(matches!(err, Error::MissingData(_)));
    }

    #[test]
    fn config_validation() {
        assert!(CleaningConfig::new(0.0, 0.5, 0.1).is_err());
        assert!(CleaningConfig::new(0.2, 1.5, 0.1).is_err());
        assert!(CleaningConfig::new(0.2, 0.5, 0.0).is_err());
        let cfg = CleaningConfig::for_variant(Variant::Medium);
        assert_eq!((cfg.tau, cfg.theta, cfg.downer_gain), (0.23, 0.5, 0.10));
    }
}
