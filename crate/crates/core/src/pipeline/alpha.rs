//! Krippendorff's alpha with the interval difference function.

use crate::error::{Error, Result};

/// Participants × items table of unit-scaled ratings; `None` marks a
/// missing cell.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RatingTable {
    pub rows: Vec<Vec<Option<f64>>>,
}

impl RatingTable {
    pub fn new(rows: Vec<Vec<Option<f64>>>) -> Self {
        RatingTable { rows }
    }

    pub fn participants(&self) -> usize {
        self.rows.len()
    }

    pub fn items(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Present values per item (column).
    pub fn units(&self) -> Vec<Vec<f64>> {
        let mut units = vec![Vec::new(); self.items()];
        for row in &self.rows {
            for (item, cell) in row.iter().enumerate() {
                if let Some(v) = cell {
                    units[item].push(*v);
                }
            }
        }
        units
    }
}

pub fn krippendorff_alpha(table: &RatingTable) -> Result<f64> {
    alpha_from_units(table.units().iter().map(Vec::as_slice))
}

/// Alpha over units given as lists of the values they received. Units with
/// fewer than two values are not pairable and are ignored.
///
/// With squared differences the coincidence-matrix sums reduce to
/// within-unit and total sums of squared deviations:
/// `D_o = (1/n) Σ_u 2·m_u·SS_u / (m_u - 1)` and `D_e = 2·n·SS / (n (n - 1))`.
pub fn alpha_from_units<'a, I>(units: I) -> Result<f64>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut n = 0usize;
    let mut observed = 0.0;
    let mut sum = 0.0;
    let mut pairable = Vec::new();
    for unit in units {
        let m = unit.len();
        if m < 2 {
            continue;
        }
        let mean = unit.iter().sum::<f64>() / m as f64;
        let ss: f64 = unit.iter().map(|v| (v - mean).powi(2)).sum();
        observed += 2.0 * m as f64 * ss / (m - 1) as f64;
        n += m;
        sum += unit.iter().sum::<f64>();
        pairable.push(unit);
    }
    if n < 2 {
        return Err(Error::UndefinedAgreement("no pairable values".into()));
    }
    let grand = sum / n as f64;
    let total_ss: f64 = pairable
        .iter()
        .flat_map(|u| u.iter())
        .map(|v| (v - grand).powi(2))
        .sum();
    let nf = n as f64;
    let d_o = observed / nf;
    let d_e = 2.0 * nf * total_ss / (nf * (nf - 1.0));
    if d_e <= 0.0 {
        return Err(Error::UndefinedAgreement(
            "pairable values show no variation".into(),
        ));
    }
    Ok(1.0 - d_o / d_e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[&[Option<f64>]]) -> RatingTable {
        RatingTable::new(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn perfect_agreement_is_one() {
        let t = table(&[
            &[Some(0.0), Some(0.5), Some(1.0), None],
            &[Some(0.0), Some(0.5), Some(1.0), Some(0.25)],
            &[Some(0.0), None, Some(1.0), Some(0.25)],
        ]);
        assert_eq!(krippendorff_alpha(&t).unwrap(), 1.0);
    }

    #[test]
    fn balanced_disagreement_is_zero() {
        // Units {0,0} and {0,1}: D_o = (0 + 2) / 4 = 0.5; values 0,0,0,1 give
        // 6 ordered unequal pairs, D_e = 6 / 12 = 0.5.
        let t = table(&[&[Some(0.0), Some(0.0)], &[Some(0.0), Some(1.0)]]);
        assert!(krippendorff_alpha(&t).unwrap().abs() < 1e-15);
    }

    #[test]
    fn fully_crossed_disagreement_is_negative() {
        // Units {0,1} and {1,0}: D_o = 1, D_e = 8/12, alpha = -0.5.
        let t = table(&[&[Some(0.0), Some(1.0)], &[Some(1.0), Some(0.0)]]);
        assert!((krippendorff_alpha(&t).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn undefined_cases() {
        let single = table(&[&[Some(0.5), Some(0.2)]]);
        assert!(matches!(
            krippendorff_alpha(&single),
            Err(Error::UndefinedAgreement(_))
        ));
        let flat = table(&[&[Some(0.5), Some(0.5)], &[Some(0.5), Some(0.5)]]);
        assert!(krippendorff_alpha(&flat).is_err());
    }

    #[test]
    fn participant_order_does_not_matter() {
        let rows = [
            [Some(0.0), Some(0.25), None, Some(1.0)],
            [Some(0.25), Some(0.25), Some(0.5), Some(0.75)],
            [None, Some(0.5), Some(0.75), Some(1.0)],
        ];
        let a = krippendorff_alpha(&RatingTable::new(rows.iter().map(|r| r.to_vec()).collect()))
            .unwrap();
        let b = krippendorff_alpha(&RatingTable::new(
            rows.iter().rev().map(|r| r.to_vec()).collect(),
        ))
        .unwrap();
        assert!((a - b).abs() < 1e-15);
    }
}
