//! Epsilon support vector regression with an RBF kernel, solved by SMO
//! (maximal violating pair with second-order working set selection).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SvrParams {
    pub c: f64,
    pub epsilon: f64,
    /// KKT tolerance: stop once the maximal violation drops below this.
    pub tolerance: f64,
    /// Iteration cap, in passes over the 2n dual variables.
    pub max_passes: usize,
}

impl Default for SvrParams {
    fn default() -> Self {
        SvrParams {
            c: 1.0,
            epsilon: 0.1,
            tolerance: 1e-3,
            max_passes: 10_000,
        }
    }
}

impl SvrParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::Config(format!("C must be positive, got {}", self.c)));
        }
        if !(self.epsilon >= 0.0 && self.epsilon.is_finite()) {
            return Err(Error::Config(format!("epsilon must be >= 0, got {}", self.epsilon)));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::Config("tolerance must be positive".into()));
        }
        if self.max_passes == 0 {
            return Err(Error::Config("max_passes must be positive".into()));
        }
        Ok(())
    }
}

/// Per-feature standardization; features with zero spread are dropped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Standardizer {
    pub n_features: usize,
    /// Indices of the retained input features.
    pub kept: Vec<usize>,
    pub mean: Vec<f64>,
    pub std: Vec<f64>,
}

impl Standardizer {
    pub fn fit(xs: &[Vec<f64>]) -> Self {
        let d = xs.first().map_or(0, Vec::len);
        let n = xs.len() as f64;
        let (mut kept, mut mean, mut std) = (Vec::new(), Vec::new(), Vec::new());
        for f in 0..d {
            let m = xs.iter().map(|x| x[f]).sum::<f64>() / n;
            let v = xs.iter().map(|x| (x[f] - m).powi(2)).sum::<f64>() / n;
            let s = v.sqrt();
            if s > 1e-12 * m.abs().max(1.0) {
                kept.push(f);
                mean.push(m);
                std.push(s);
            }
        }
        Standardizer { n_features: d, kept, mean, std }
    }

    pub fn transform(&self, x: &[f64]) -> Vec<f64> {
        self.kept
            .iter()
            .zip(self.mean.iter().zip(&self.std))
            .map(|(&f, (m, s))| (x[f] - m) / s)
            .collect()
    }
}

fn rbf(gamma: f64, a: &[f64], b: &[f64]) -> f64 {
    let d2: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum();
    (-gamma * d2).exp()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Svr {
    pub params: SvrParams,
    pub gamma: f64,
    pub scaler: Standardizer,
    /// Standardized support vectors.
    pub support_vectors: Vec<Vec<f64>>,
    /// Dual coefficients alpha - alpha*, one per support vector.
    pub coefficients: Vec<f64>,
    pub bias: f64,
    pub converged: bool,
    pub iterations: usize,
    /// Maximal KKT violation at termination.
    pub kkt_gap: f64,
}

impl Svr {
    /// Fits on raw (unstandardized) features. Gamma is 1 / (number of
    /// retained features), i.e. the "scale" heuristic on unit-variance data.
    pub fn fit(xs: &[Vec<f64>], ys: &[f64], params: SvrParams) -> Result<Svr> {
        params.validate()?;
        if xs.len() != ys.len() {
            return Err(Error::Validation("features and targets differ in length".into()));
        }
        if xs.len() < 2 {
            return Err(Error::InsufficientData(format!(
                "{} training points, need at least 2",
                xs.len()
            )));
        }
        let d = xs[0].len();
        if xs.iter().any(|x| x.len() != d) {
            return Err(Error::Validation("ragged feature matrix".into()));
        }
        if xs.iter().flatten().chain(ys).any(|v| !v.is_finite()) {
            return Err(Error::Validation("non-finite feature or target".into()));
        }

        let scaler = Standardizer::fit(xs);
        let z: Vec<Vec<f64>> = xs.iter().map(|x| scaler.transform(x)).collect();
        let gamma = 1.0 / scaler.kept.len().max(1) as f64;
        let n = z.len();
        let mut k = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = rbf(gamma, &z[i], &z[j]);
                k[i * n + j] = v;
                k[j * n + i] = v;
            }
        }
        let sol = solve(&k, ys, &params);

        let mut support_vectors = Vec::new();
        let mut coefficients = Vec::new();
        for i in 0..n {
            let beta = sol.alpha[i] - sol.alpha[i + n];
            if beta != 0.0 {
                support_vectors.push(z[i].clone());
                coefficients.push(beta);
            }
        }
        Ok(Svr {
            params,
            gamma,
            scaler,
            support_vectors,
            coefficients,
            bias: -sol.rho,
            converged: sol.converged,
            iterations: sol.iterations,
            kkt_gap: sol.gap,
        })
    }

    /// Raw regression value; not clamped.
    pub fn predict(&self, x: &[f64]) -> f64 {
        let z = self.scaler.transform(x);
        self.support_vectors
            .iter()
            .zip(&self.coefficients)
            .map(|(sv, c)| c * rbf(self.gamma, sv, &z))
            .sum::<f64>()
            + self.bias
    }

    pub fn predict_clamped(&self, x: &[f64]) -> f64 {
        self.predict(x).clamp(0.0, 1.0)
    }

    /// Recomputes the maximal KKT violation of the stored solution on the
    /// given training data (which must be the data it was fitted on).
    pub fn kkt_violation(&self, xs: &[Vec<f64>], ys: &[f64]) -> f64 {
        let c = self.params.c;
        let eps = self.params.epsilon;
        let z: Vec<Vec<f64>> = xs.iter().map(|x| self.scaler.transform(x)).collect();
        // beta per training point, matched back through the stored vectors.
        let beta: Vec<f64> = z
            .iter()
            .map(|zi| {
                self.support_vectors
                    .iter()
                    .position(|sv| sv == zi)
                    .map_or(0.0, |p| self.coefficients[p])
            })
            .collect();
        let mut worst: f64 = 0.0;
        for (i, zi) in z.iter().enumerate() {
            let f = self.predict_standardized(zi);
            let r = ys[i] - f;
            let b = beta[i];
            let tol = 1e-9 * c;
            // beta = 0: |r| <= eps; 0 < beta < C: r = eps; beta = C: r >= eps.
            let v = if b.abs() <= tol {
                (r.abs() - eps).max(0.0)
            } else if b > 0.0 && b < c - tol {
                (r - eps).abs()
            } else if b >= c - tol {
                (eps - r).max(0.0)
            } else if b < 0.0 && b > -c + tol {
                (r + eps).abs()
            } else {
                (r + eps).max(0.0)
            };
            worst = worst.max(v);
        }
        worst
    }

    fn predict_standardized(&self, z: &[f64]) -> f64 {
        self.support_vectors
            .iter()
            .zip(&self.coefficients)
            .map(|(sv, c)| c * rbf(self.gamma, sv, z))
            .sum::<f64>()
            + self.bias
    }
}

struct Solution {
    alpha: Vec<f64>,
    rho: f64,
    converged: bool,
    iterations: usize,
    gap: f64,
}

/// Dual: min 1/2 a'Qa + p'a  s.t. y'a = 0, 0 <= a <= C over 2n variables,
/// where the first n carry y = +1, p = eps - t and the rest y = -1,
/// p = eps + t.
fn solve(k: &[f64], t: &[f64], params: &SvrParams) -> Solution {
    let n = t.len();
    let l = 2 * n;
    let c = params.c;
    let sign = |i: usize| if i < n { 1.0 } else { -1.0 };
    let q = |i: usize, j: usize| sign(i) * sign(j) * k[(i % n) * n + (j % n)];
    let qd = |i: usize| k[(i % n) * n + (i % n)];

    let mut alpha = vec![0.0; l];
    let mut grad: Vec<f64> = (0..l)
        .map(|i| {
            if i < n {
                params.epsilon - t[i]
            } else {
                params.epsilon + t[i - n]
            }
        })
        .collect();

    let max_iter = params.max_passes.saturating_mul(l);
    let mut iterations = 0;
    let mut converged = false;
    let mut gap = f64::INFINITY;
    let tau = 1e-12;

    while iterations < max_iter {
        // i maximizes -y G over I_up.
        let (mut gmax, mut gi) = (f64::NEG_INFINITY, usize::MAX);
        for s in 0..l {
            let y = sign(s);
            let up = if y > 0.0 { alpha[s] < c } else { alpha[s] > 0.0 };
            if up && -y * grad[s] >= gmax {
                gmax = -y * grad[s];
                gi = s;
            }
        }
        // j by second-order gain over I_low.
        let (mut gmin, mut gj, mut best) = (f64::INFINITY, usize::MAX, f64::INFINITY);
        for s in 0..l {
            let y = sign(s);
            let low = if y > 0.0 { alpha[s] > 0.0 } else { alpha[s] < c };
            if !low {
                continue;
            }
            let v = -y * grad[s];
            gmin = gmin.min(v);
            if gi != usize::MAX && v < gmax {
                let b = gmax - v;
                let a = qd(gi) + qd(s) - 2.0 * sign(gi) * sign(s) * q(gi, s);
                let a = if a > 0.0 { a } else { tau };
                let obj = -(b * b) / a;
                if obj <= best {
                    best = obj;
                    gj = s;
                }
            }
        }
        gap = gmax - gmin;
        if gi == usize::MAX || gj == usize::MAX || gap < params.tolerance {
            converged = true;
            break;
        }
        iterations += 1;

        let (i, j) = (gi, gj);
        let (old_i, old_j) = (alpha[i], alpha[j]);
        if sign(i) != sign(j) {
            let mut quad = qd(i) + qd(j) + 2.0 * q(i, j);
            if quad <= 0.0 {
                quad = tau;
            }
            let delta = (-grad[i] - grad[j]) / quad;
            let diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if diff > 0.0 {
                if alpha[j] < 0.0 {
                    alpha[j] = 0.0;
                    alpha[i] = diff;
                }
            } else if alpha[i] < 0.0 {
                alpha[i] = 0.0;
                alpha[j] = -diff;
            }
            if diff > 0.0 {
                if alpha[i] > c {
                    alpha[i] = c;
                    alpha[j] = c - diff;
                }
            } else if alpha[j] > c {
                alpha[j] = c;
                alpha[i] = c + diff;
            }
        } else {
            let mut quad = qd(i) + qd(j) - 2.0 * q(i, j);
            if quad <= 0.0 {
                quad = tau;
            }
            let delta = (grad[i] - grad[j]) / quad;
            let sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if sum > c {
                if alpha[i] > c {
                    alpha[i] = c;
                    alpha[j] = sum - c;
                }
            } else if alpha[j] < 0.0 {
                alpha[j] = 0.0;
                alpha[i] = sum;
            }
            if sum > c {
                if alpha[j] > c {
                    alpha[j] = c;
                    alpha[i] = sum - c;
                }
            } else if alpha[i] < 0.0 {
                alpha[i] = 0.0;
                alpha[j] = sum;
            }
        }
        let (di, dj) = (alpha[i] - old_i, alpha[j] - old_j);
        for s in 0..l {
            grad[s] += q(i, s) * di + q(j, s) * dj;
        }
    }

    // Bias from free variables, or the middle of the feasible interval.
    let (mut ub, mut lb) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut sum_free, mut n_free) = (0.0, 0usize);
    for s in 0..l {
        let y = sign(s);
        let yg = y * grad[s];
        if alpha[s] >= c {
            if y < 0.0 {
                ub = ub.min(yg);
            } else {
                lb = lb.max(yg);
            }
        } else if alpha[s] <= 0.0 {
            if y > 0.0 {
                ub = ub.min(yg);
            } else {
                lb = lb.max(yg);
            }
        } else {
            n_free += 1;
            sum_free += yg;
        }
    }
    let rho = if n_free > 0 {
        sum_free / n_free as f64
    } else {
        (ub + lb) / 2.0
    };
    Solution {
        alpha,
        rho,
        converged,
        iterations,
        gap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(n: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
        let xs: Vec<Vec<f64>> = (0..n).map(|i| vec![i as f64 / (n - 1) as f64, 3.0]).collect();
        let ys = xs.iter().map(|x| x[0]).collect();
        (xs, ys)
    }

    #[test]
    fn constant_targets_give_constant_predictions() {
        let xs: Vec<Vec<f64>> = (0..10).map(|i| vec![i as f64, (i * i) as f64]).collect();
        let m = Svr::fit(&xs, &[0.4; 10], SvrParams::default()).unwrap();
        assert!(m.converged);
        for x in &xs {
            assert!((m.predict(x) - 0.4).abs() <= 0.1 + 1e-3);
        }
        assert!(m.coefficients.is_empty());
        assert_eq!(m.predict(&[100.0, -4.0]), m.predict(&[0.0, 0.0]));
    }

    #[test]
    fn one_dimensional_toy_fits_inside_tube() {
        let (xs, ys) = line(30);
        let m = Svr::fit(&xs, &ys, SvrParams::default()).unwrap();
        assert!(m.converged);
        // Degenerate second feature is dropped.
        assert_eq!(m.scaler.kept, vec![0]);
        for (x, y) in xs.iter().zip(&ys) {
            assert!((m.predict(x) - y).abs() <= 0.1 + 1e-3);
        }
        assert!(m.kkt_violation(&xs, &ys) <= 1e-3 + 1e-9);
        assert!(m.coefficients.iter().all(|c| c.abs() <= 1.0 + 1e-12));
    }

    #[test]
    fn duplicated_training_set_predicts_the_same() {
        let (xs, ys) = line(20);
        let a = Svr::fit(&xs, &ys, SvrParams::default()).unwrap();
        let xs2: Vec<Vec<f64>> = xs.iter().chain(&xs).cloned().collect();
        let ys2: Vec<f64> = ys.iter().chain(&ys).copied().collect();
        let b = Svr::fit(&xs2, &ys2, SvrParams::default()).unwrap();
        for x in &xs {
            assert!((a.predict(x) - b.predict(x)).abs() < 5e-3);
        }
    }

    #[test]
    fn midpoint_prediction_is_between() {
        let xs = vec![vec![0.0], vec![1.0]];
        let m = Svr::fit(&xs, &[0.0, 1.0], SvrParams::default()).unwrap();
        let (lo, hi) = (m.predict(&xs[0]), m.predict(&xs[1]));
        let mid = m.predict(&[0.5]);
        assert!(lo < mid && mid < hi);
    }

    #[test]
    fn fits_a_nonlinear_function() {
        let xs: Vec<Vec<f64>> = (0..60).map(|i| vec![i as f64 / 10.0]).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 0.5 + 0.4 * x[0].sin()).collect();
        let m = Svr::fit(&xs, &ys, SvrParams { epsilon: 0.01, ..SvrParams::default() }).unwrap();
        assert!(m.converged);
        let worst = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (m.predict(x) - y).abs())
            .fold(0.0, f64::max);
        assert!(worst < 0.05, "{worst}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Svr::fit(&[vec![1.0]], &[1.0], SvrParams::default()).is_err());
        assert!(Svr::fit(&[vec![1.0], vec![f64::NAN]], &[1.0, 0.0], SvrParams::default()).is_err());
        let p = SvrParams { c: 0.0, ..SvrParams::default() };
        assert!(matches!(
            Svr::fit(&[vec![1.0], vec![2.0]], &[1.0, 0.0], p),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn iteration_cap_reports_non_convergence() {
        let xs: Vec<Vec<f64>> = (0..40).map(|i| vec![(i * 7 % 13) as f64, (i % 5) as f64]).collect();
        let ys: Vec<f64> = (0..40).map(|i| ((i * 31) % 17) as f64 / 17.0).collect();
        let p = SvrParams { max_passes: 1, tolerance: 1e-12, epsilon: 0.0, ..SvrParams::default() };
        let m = Svr::fit(&xs, &ys, p).unwrap();
        assert!(!m.converged);
    }
}
