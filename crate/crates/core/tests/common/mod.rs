//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};

/// `U(x) = Σ (r − ⟨α,x⟩)²/(2σ_r²) + ‖x − μ₀‖²/(2σ₀²)`, summed term by term.
pub fn potential_value(alpha: &[f64], noise_var: f64, mu0: &[f64], prior_var: f64, rewards: &[f64], x: &[f64]) -> f64 {
    let ax: f64 = alpha.iter().zip(x).map(|(a, b)| a * b).sum();
    let lik: f64 = rewards.iter().map(|r| (r - ax).powi(2) / (2.0 * noise_var)).sum();
    let prior: f64 = x.iter().zip(mu0).map(|(a, m)| (a - m).powi(2)).sum::<f64>() / (2.0 * prior_var);
    lik + prior
}

pub fn central_difference(f: impl Fn(&[f64]) -> f64, x: &[f64], step: f64) -> Vec<f64> {
    (0..x.len())
        .map(|i| {
            let mut plus = x.to_vec();
            let mut minus = x.to_vec();
            plus[i] += step;
            minus[i] -= step;
            (f(&plus) - f(&minus)) / (2.0 * step)
        })
        .collect()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Posterior of the linear-Gaussian model by explicit precision-matrix inversion.
pub fn dense_posterior(alpha: &[f64], noise_var: f64, mu0: &[f64], prior_var: f64, rewards: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
    let d = alpha.len();
    let a = DVector::from_column_slice(alpha);
    let n = rewards.len() as f64;
    let precision = DMatrix::identity(d, d) / prior_var + &a * a.transpose() * (n / noise_var);
    let cov = precision.try_inverse().expect("precision is positive definite");
    let rhs = DVector::from_column_slice(mu0) / prior_var + &a * (rewards.iter().sum::<f64>() / noise_var);
    (&cov * rhs, cov)
}

/// `regret(N) / regret(N/2)`.
pub fn growth_ratio(mean: &[f64]) -> f64 {
    let n = mean.len();
    mean[n - 1] / mean[n / 2 - 1]
}
