mod common;

use common::oracles::brute_spearman;
use idbench_core::evaluator::{evaluate, spearman, ScoreMatrix};
use idbench_core::model::{Benchmark, GoldScore, IdentifierPair};
use idbench_core::Task;
use proptest::prelude::*;

/// Vectors of small integers (plenty of ties) or continuous values.
fn values(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop_oneof![
        prop::collection::vec((0u8..6).prop_map(f64::from), n),
        prop::collection::vec(-100.0f64..100.0, n),
    ]
}

fn non_constant(v: &[f64]) -> bool {
    v.iter().any(|x| *x != v[0])
}

proptest! {
    #[test]
    fn matches_brute_force((x, y) in (3usize..60).prop_flat_map(|n| (values(n), values(n)))) {
        prop_assume!(non_constant(&x) && non_constant(&y));
        let r = spearman(&x, &y).unwrap();
        prop_assert!((r - brute_spearman(&x, &y)).abs() < 1e-12);
    }

    #[test]
    fn rank_based_and_antisymmetric((x, y) in (3usize..40).prop_flat_map(|n| (values(n), values(n)))) {
        prop_assume!(non_constant(&x) && non_constant(&y));
        let r = spearman(&x, &y).unwrap();
        let squashed: Vec<f64> = x.iter().map(|v| (v / 50.0).tanh() * 3.0 + 7.0).collect();
        prop_assert!((spearman(&squashed, &y).unwrap() - r).abs() < 1e-12);
        let negated: Vec<f64> = y.iter().map(|v| -v).collect();
        prop_assert!((spearman(&x, &negated).unwrap() + r).abs() < 1e-12);
        prop_assert!((spearman(&y, &x).unwrap() - r).abs() < 1e-12);
    }

    #[test]
    fn evaluate_ignores_pair_order(
        golds in prop::collection::vec((0.0f64..1.0, 0.0f64..1.0, proptest::option::of(0.0f64..1.0)), 5..30),
        scores in prop::collection::vec(proptest::option::of(-1.0f64..1.0), 30),
        seed in any::<u64>(),
    ) {
        let rows: Vec<GoldScore> = golds.iter().enumerate().map(|(i, &(r, s, c))| GoldScore {
            pair: IdentifierPair::from_strs(&format!("a{i}"), &format!("b{i}")).unwrap(),
            relatedness: r,
            similarity: s,
            contextual_similarity: c,
        }).collect();
        let bench = Benchmark::new(rows.clone()).unwrap();
        let mut matrix = ScoreMatrix::for_benchmark(&bench);
        matrix.add_column("x", scores[..rows.len()].to_vec()).unwrap();

        // Shuffle the score rows and benchmark rows independently.
        let n = rows.len();
        let perm: Vec<usize> = {
            let mut p: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                p.swap(i, (s >> 33) as usize % (i + 1));
            }
            p
        };
        let shuffled_bench = Benchmark::new(perm.iter().map(|&i| rows[i].clone()).collect()).unwrap();
        let pairs: Vec<IdentifierPair> = perm.iter().rev().map(|&i| matrix.pairs[i].clone()).collect();
        let col: Vec<Option<f64>> = perm.iter().rev().map(|&i| matrix.columns[0].scores[i]).collect();
        for task in Task::ALL {
            let a = evaluate(&matrix.pairs, &matrix.columns[0].scores, &bench, task);
            let b = evaluate(&pairs, &col, &shuffled_bench, task);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert!((a.correlation - b.correlation).abs() < 1e-12);
                    prop_assert_eq!(a.n, b.n);
                    prop_assert_eq!(a.coverage, b.coverage);
                }
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
            }
        }
    }
}

#[test]
fn perfect_orderings_are_exact() {
    let x: Vec<f64> = (0..50).map(f64::from).collect();
    let rev: Vec<f64> = x.iter().rev().copied().collect();
    assert_eq!(spearman(&x, &x).unwrap(), 1.0);
    assert_eq!(spearman(&x, &rev).unwrap(), -1.0);
}
