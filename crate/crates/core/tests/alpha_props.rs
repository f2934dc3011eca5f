mod common;

use common::oracles::alpha_coincidence;
use idbench_core::pipeline::{krippendorff_alpha, RatingTable};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tables of Likert-valued cells on the unit scale, some cells missing.
fn table() -> impl Strategy<Value = Vec<Vec<Option<f64>>>> {
    (2usize..7, 2usize..15).prop_flat_map(|(raters, items)| {
        prop::collection::vec(
            prop::collection::vec(proptest::option::weighted(0.7, (0u8..5).prop_map(|v| f64::from(v) / 4.0)), items),
            raters,
        )
    })
}

proptest! {
    #[test]
    fn matches_coincidence_matrix(rows in table()) {
        let ours = krippendorff_alpha(&RatingTable::new(rows.clone()));
        match alpha_coincidence(&rows) {
            Some(reference) => {
                let a = ours.unwrap();
                prop_assert!((a - reference).abs() < 1e-9, "{} vs {}", a, reference);
            }
            None => prop_assert!(ours.is_err()),
        }
    }

    #[test]
    fn rater_order_does_not_matter(rows in table(), rot in 0usize..7) {
        let mut turned = rows.clone();
        let k = rot % turned.len();
        turned.rotate_left(k);
        turned.reverse();
        let a = krippendorff_alpha(&RatingTable::new(rows));
        let b = krippendorff_alpha(&RatingTable::new(turned));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert!((a - b).abs() < 1e-12),
            (Err(_), Err(_)) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn bounded_above_by_one(rows in table()) {
        if let Ok(a) = krippendorff_alpha(&RatingTable::new(rows)) {
            prop_assert!(a <= 1.0 + 1e-12);
        }
    }
}

#[test]
fn perfect_agreement_is_one() {
    let row: Vec<Option<f64>> = (0..10).map(|i| Some(f64::from(i % 5) / 4.0)).collect();
    let mut rows = vec![row; 4];
    rows[2][3] = None;
    assert_eq!(krippendorff_alpha(&RatingTable::new(rows)).unwrap(), 1.0);
}

#[test]
fn uniform_noise_is_near_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rows: Vec<Vec<Option<f64>>> = (0..5)
        .map(|_| (0..200).map(|_| Some(f64::from(rng.gen_range(0u8..5)) / 4.0)).collect())
        .collect();
    let a = krippendorff_alpha(&RatingTable::new(rows)).unwrap();
    assert!(a.abs() < 0.1, "alpha {a}");
}
