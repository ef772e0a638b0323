//! Per-arm potential `U(x) = −Σ_j log P(R_j | x) − log π(x)`, its gradients and
//! the smoothness/convexity constants derived from it.
//!
//! For the linear-Gaussian reward model
//!
//! ```text
//! U(x) = Σ_j (R_j − ⟨α, x⟩)² / (2σ_r²) + ‖x − μ₀‖² / (2σ₀²)
//! ∇U(x) = α (n⟨α, x⟩ − Σ_j R_j) / σ_r² + (x − μ₀) / σ₀²
//! ```
//!
//! so the full gradient only needs the pull count and the reward sum.

use rand::seq::index;
use rand::Rng;

use crate::bandit::{Arm, ArmHistory, GaussianPrior};
use crate::error::{Error, Result};
use crate::linalg::{dist_sq, dot};

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialSpec {
    pub arm: Arm,
    pub prior: GaussianPrior,
    /// Pull count the constants were derived for.
    pub pulls: usize,
    pub lipschitz_l: f64,
    pub convexity_m: f64,
    pub reward_convexity_nu: f64,
    pub condition_kappa: f64,
    pub prior_quality_log_b: f64,
}

impl PotentialSpec {
    pub fn dim(&self) -> usize {
        self.arm.dim()
    }

    /// Largest Hessian eigenvalue of the full (un-averaged) potential, `max(n, 1)·L`.
    pub fn potential_lipschitz(&self) -> f64 {
        self.pulls.max(1) as f64 * self.lipschitz_l
    }
}

/// Smoothness and convexity constants for an arm after `n` pulls.
///
/// Constants follow the averaged-likelihood convention: they bound the
/// Hessian of `U/n`,
///
/// ```text
/// ∇²U / n = ααᵀ/σ_r² + I/(n σ₀²)
/// ```
///
/// whose eigenvalues are `‖α‖²/σ_r² + 1/(nσ₀²)` along `α` and `1/(nσ₀²)` on
/// its orthogonal complement. Hence `L = ‖α‖²/σ_r² + 1/(nσ₀²)` and
/// `m = 1/(nσ₀²)`; the rank-one likelihood contributes nothing to `m` when
/// `d ≥ 2`, so strong convexity comes from the prior alone. With `n = 0` only
/// the prior remains and `L = m = 1/σ₀²`.
///
/// `ν = 1/σ_r²` is the curvature of `−log P(R|x)` in the reward, and
/// `log B = ‖x_* − μ₀‖² / (2σ₀²)`.
pub fn constants_for(arm: &Arm, prior: &GaussianPrior, n: usize) -> Result<PotentialSpec> {
    if arm.dim() != prior.dim() {
        return Err(Error::DimensionMismatch {
            expected: prior.dim(),
            got: arm.dim(),
        });
    }
    let noise = arm.reward_noise_var();
    if noise <= 0.0 {
        return Err(Error::invalid(
            "potential requires a positive reward noise variance",
        ));
    }
    let prior_prec = 1.0 / prior.var();
    let (lipschitz_l, convexity_m) = if n == 0 {
        (prior_prec, prior_prec)
    } else {
        let per_obs_prior = prior_prec / n as f64;
        (arm.feature_norm_sq() / noise + per_obs_prior, per_obs_prior)
    };
    Ok(PotentialSpec {
        arm: arm.clone(),
        prior: prior.clone(),
        pulls: n,
        lipschitz_l,
        convexity_m,
        reward_convexity_nu: 1.0 / noise,
        condition_kappa: lipschitz_l / convexity_m,
        prior_quality_log_b: dist_sq(arm.true_param(), prior.mean()) / (2.0 * prior.var()),
    })
}

/// Inputs of one gradient evaluation. `batch` is set iff a stochastic
/// estimate is wanted.
#[derive(Debug, Clone, Copy)]
pub struct GradientRequest<'a> {
    pub point: &'a [f64],
    pub history: &'a ArmHistory,
    pub batch: Option<usize>,
}

impl<'a> GradientRequest<'a> {
    pub fn full(point: &'a [f64], history: &'a ArmHistory) -> Self {
        Self {
            point,
            history,
            batch: None,
        }
    }

    pub fn stochastic(point: &'a [f64], history: &'a ArmHistory, batch: usize) -> Self {
        Self {
            point,
            history,
            batch: Some(batch),
        }
    }
}

fn check_dim(spec: &PotentialSpec, point: &[f64]) -> Result<()> {
    if point.len() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            got: point.len(),
        });
    }
    Ok(())
}

/// Writes `α (n⟨α,x⟩ − scaled_sum)/σ_r² + (x − μ₀)/σ₀²` into `out`.
#[inline]
fn write_gradient(spec: &PotentialSpec, x: &[f64], n: f64, scaled_sum: f64, out: &mut [f64]) {
    let alpha = spec.arm.feature();
    let mu0 = spec.prior.mean();
    let prior_prec = 1.0 / spec.prior.var();
    let lik = (n * dot(alpha, x) - scaled_sum) / spec.arm.reward_noise_var();
    for i in 0..out.len() {
        out[i] = alpha[i] * lik + (x[i] - mu0[i]) * prior_prec;
    }
}

pub(crate) fn grad_full_into(spec: &PotentialSpec, x: &[f64], history: &ArmHistory, out: &mut [f64]) {
    write_gradient(spec, x, history.pulls() as f64, history.sum(), out);
}

/// Draws the minibatch (if any) and writes the gradient estimate. Falls back to
/// the exact gradient, without touching `rng`, when the clamped batch covers
/// the whole history.
pub(crate) fn grad_stochastic_into<R: Rng + ?Sized>(
    spec: &PotentialSpec,
    x: &[f64],
    history: &ArmHistory,
    batch: usize,
    rng: &mut R,
    out: &mut [f64],
) {
    let n = history.pulls();
    let size = n.min(batch);
    if size == n {
        grad_full_into(spec, x, history, out);
        return;
    }
    let rewards = history.rewards();
    let subset_sum: f64 = index::sample(rng, n, size).into_iter().map(|i| rewards[i]).sum();
    write_gradient(spec, x, n as f64, subset_sum * n as f64 / size as f64, out);
}

/// Exact gradient of the negative log posterior.
pub fn grad_full(spec: &PotentialSpec, req: &GradientRequest<'_>) -> Result<Vec<f64>> {
    if req.batch.is_some() {
        return Err(Error::invalid("full gradient requested with a batch size"));
    }
    check_dim(spec, req.point)?;
    let mut out = vec![0.0; spec.dim()];
    grad_full_into(spec, req.point, req.history, &mut out);
    Ok(out)
}

/// Minibatch gradient estimate with `|S| = min(𝓛_a(n), k)` rewards drawn
/// uniformly without replacement, likelihood term rescaled by `𝓛_a(n)/|S|`.
pub fn grad_stochastic<R: Rng + ?Sized>(
    spec: &PotentialSpec,
    req: &GradientRequest<'_>,
    rng: &mut R,
) -> Result<Vec<f64>> {
    let batch = match req.batch {
        Some(k) if k >= 1 => k,
        Some(_) => return Err(Error::invalid("batch size must be at least 1")),
        None => return Err(Error::invalid("stochastic gradient requested without a batch size")),
    };
    check_dim(spec, req.point)?;
    let mut out = vec![0.0; spec.dim()];
    grad_stochastic_into(spec, req.point, req.history, batch, rng, &mut out);
    Ok(out)
}

/// Gradient estimate for an explicit subset of reward indices.
pub fn grad_subset(
    spec: &PotentialSpec,
    point: &[f64],
    history: &ArmHistory,
    subset: &[usize],
) -> Result<Vec<f64>> {
    check_dim(spec, point)?;
    let n = history.pulls();
    if subset.is_empty() && n > 0 {
        return Err(Error::invalid("empty subset of a non-empty history"));
    }
    let rewards = history.rewards();
    let mut sum = 0.0;
    for &i in subset {
        sum += *rewards.get(i).ok_or(Error::IndexOutOfRange { index: i, len: n })?;
    }
    let scaled = if subset.is_empty() {
        0.0
    } else {
        sum * n as f64 / subset.len() as f64
    };
    let mut out = vec![0.0; spec.dim()];
    write_gradient(spec, point, n as f64, scaled, &mut out);
    Ok(out)
}
