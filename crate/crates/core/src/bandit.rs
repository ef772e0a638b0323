//! Synthetic linear-Gaussian bandit environment and its exact conjugate posterior.
//!
//! Each arm `a` has a feature vector `α_a`, an unknown parameter `x_{a,*}` and
//! scalar rewards `R ~ N(⟨α_a, x_{a,*}⟩, σ_r²)`. With an isotropic Gaussian
//! prior the posterior over `x_a` is Gaussian and available in closed form,
//! which backs exact Thompson sampling and serves as the oracle for the
//! Langevin samplers.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::dot;

/// Prior variance used to encode a "flat" prior while keeping the potential
/// strongly convex.
pub const FLAT_PRIOR_VAR: f64 = 1e6;

#[derive(Debug, Clone, PartialEq)]
pub struct Arm {
    feature: Vec<f64>,
    true_param: Vec<f64>,
    reward_noise_var: f64,
}

impl Arm {
    /// A noise variance of exactly zero is accepted so noiseless environments
    /// can be simulated, but such an arm cannot back a [`crate::potential::PotentialSpec`].
    pub fn new(feature: Vec<f64>, true_param: Vec<f64>, reward_noise_var: f64) -> Result<Self> {
        if feature.is_empty() {
            return Err(Error::invalid("arm feature must be non-empty"));
        }
        if feature.len() != true_param.len() {
            return Err(Error::DimensionMismatch {
                expected: feature.len(),
                got: true_param.len(),
            });
        }
        if feature.iter().chain(&true_param).any(|v| !v.is_finite()) {
            return Err(Error::invalid("arm feature and parameter must be finite"));
        }
        if dot(&feature, &feature) <= 0.0 {
            return Err(Error::invalid("arm feature must have positive norm"));
        }
        if !(reward_noise_var >= 0.0 && reward_noise_var.is_finite()) {
            return Err(Error::invalid(format!(
                "reward noise variance must be finite and non-negative, got {reward_noise_var}"
            )));
        }
        Ok(Self {
            feature,
            true_param,
            reward_noise_var,
        })
    }

    pub fn dim(&self) -> usize {
        self.feature.len()
    }

    pub fn feature(&self) -> &[f64] {
        &self.feature
    }

    pub fn true_param(&self) -> &[f64] {
        &self.true_param
    }

    pub fn reward_noise_var(&self) -> f64 {
        self.reward_noise_var
    }

    /// Squared Euclidean norm `ω²` of the feature vector.
    pub fn feature_norm_sq(&self) -> f64 {
        dot(&self.feature, &self.feature)
    }

    /// Expected reward `⟨α, x_*⟩`.
    pub fn expected_reward(&self) -> f64 {
        dot(&self.feature, &self.true_param)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BanditInstance {
    arms: Vec<Arm>,
    dim: usize,
    optimal_arm: usize,
}

impl BanditInstance {
    pub fn new(arms: Vec<Arm>) -> Result<Self> {
        let first = arms
            .first()
            .ok_or_else(|| Error::invalid("a bandit needs at least one arm"))?;
        let dim = first.dim();
        if let Some(bad) = arms.iter().find(|a| a.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        // Strict comparison keeps the lowest index on ties.
        let mut optimal_arm = 0;
        let mut best = arms[0].expected_reward();
        for (i, arm) in arms.iter().enumerate().skip(1) {
            let r = arm.expected_reward();
            if r > best {
                best = r;
                optimal_arm = i;
            }
        }
        Ok(Self {
            arms,
            dim,
            optimal_arm,
        })
    }

    pub fn arms(&self) -> &[Arm] {
        &self.arms
    }

    pub fn arm(&self, index: usize) -> Result<&Arm> {
        self.arms.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.arms.len(),
        })
    }

    pub fn num_arms(&self) -> usize {
        self.arms.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn optimal_arm(&self) -> usize {
        self.optimal_arm
    }

    pub fn optimal_reward(&self) -> f64 {
        self.arms[self.optimal_arm].expected_reward()
    }
}

/// Draws `⟨α_a, x_{a,*}⟩ + ε` with `ε ~ N(0, σ_r²)`.
pub fn sample_reward<R: Rng + ?Sized>(
    instance: &BanditInstance,
    arm: usize,
    rng: &mut R,
) -> Result<f64> {
    let arm = instance.arm(arm)?;
    let z: f64 = rng.sample(StandardNormal);
    Ok(arm.expected_reward() + arm.reward_noise_var().sqrt() * z)
}

/// Gap `Δ_a` between the optimal expected reward and arm `a`'s.
pub fn expected_regret_increment(instance: &BanditInstance, arm: usize) -> Result<f64> {
    let r = instance.arm(arm)?.expected_reward();
    if arm == instance.optimal_arm() {
        return Ok(0.0);
    }
    Ok((instance.optimal_reward() - r).max(0.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPrior {
    mean: Vec<f64>,
    var: f64,
}

impl GaussianPrior {
    pub fn new(mean: Vec<f64>, var: f64) -> Result<Self> {
        if mean.is_empty() {
            return Err(Error::invalid("prior mean must be non-empty"));
        }
        if mean.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("prior mean must be finite"));
        }
        if !(var > 0.0 && var.is_finite()) {
            return Err(Error::invalid(format!(
                "prior variance must be positive and finite, got {var}"
            )));
        }
        Ok(Self { mean, var })
    }

    /// `N(c·1, var·I)` in `dim` dimensions.
    pub fn isotropic(dim: usize, mean: f64, var: f64) -> Result<Self> {
        Self::new(vec![mean; dim], var)
    }

    pub fn flat(dim: usize) -> Self {
        Self {
            mean: vec![0.0; dim],
            var: FLAT_PRIOR_VAR,
        }
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn var(&self) -> f64 {
        self.var
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        let sd = self.var.sqrt();
        self.mean
            .iter()
            .map(|m| m + sd * rng.sample::<f64, _>(StandardNormal))
            .collect()
    }
}

/// Observed rewards of a single arm together with their running sum.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ArmHistory {
    rewards: Vec<f64>,
    sum: f64,
}

impl ArmHistory {
    pub fn from_rewards(rewards: Vec<f64>) -> Self {
        let sum = rewards.iter().sum();
        Self { rewards, sum }
    }

    pub fn push(&mut self, reward: f64) {
        self.rewards.push(reward);
        self.sum += reward;
    }

    pub fn rewards(&self) -> &[f64] {
        &self.rewards
    }

    /// Pull count `𝓛_a(n)`.
    pub fn pulls(&self) -> usize {
        self.rewards.len()
    }

    pub fn sum(&self) -> f64 {
        self.sum
    }
}

/// Append-only per-arm reward lists.
#[derive(Debug, Clone, PartialEq)]
pub struct RewardHistory {
    arms: Vec<ArmHistory>,
}

impl RewardHistory {
    pub fn new(num_arms: usize) -> Self {
        Self {
            arms: vec![ArmHistory::default(); num_arms],
        }
    }

    pub fn push(&mut self, arm: usize, reward: f64) -> Result<()> {
        let len = self.arms.len();
        self.arms
            .get_mut(arm)
            .ok_or(Error::IndexOutOfRange { index: arm, len })?
            .push(reward);
        Ok(())
    }

    pub fn arm(&self, arm: usize) -> Result<&ArmHistory> {
        self.arms.get(arm).ok_or(Error::IndexOutOfRange {
            index: arm,
            len: self.arms.len(),
        })
    }

    pub fn pulls(&self, arm: usize) -> Result<usize> {
        self.arm(arm).map(ArmHistory::pulls)
    }

    /// Sum of pull counts, equal to the number of rounds played.
    pub fn total_pulls(&self) -> usize {
        self.arms.iter().map(ArmHistory::pulls).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjugatePosterior {
    pub mean: DVector<f64>,
    pub covariance: DMatrix<f64>,
}

impl ConjugatePosterior {
    pub fn from_prior(prior: &GaussianPrior) -> Self {
        let d = prior.dim();
        Self {
            mean: DVector::from_column_slice(prior.mean()),
            covariance: DMatrix::from_diagonal_element(d, d, prior.var()),
        }
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// Folds one more observation `R ~ N(⟨α, x⟩, σ_r²)` into the posterior
    /// (rank-one Kalman update).
    pub fn observe(&self, arm: &Arm, reward: f64) -> Result<Self> {
        if !reward.is_finite() {
            return Err(Error::invalid(format!("reward must be finite, got {reward}")));
        }
        if arm.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: arm.dim(),
            });
        }
        let alpha = DVector::from_column_slice(arm.feature());
        let s_alpha = &self.covariance * &alpha;
        let innovation_var = arm.reward_noise_var() + alpha.dot(&s_alpha);
        if innovation_var <= 0.0 {
            return Err(Error::invalid("degenerate observation: zero innovation variance"));
        }
        let gain = &s_alpha / innovation_var;
        let mean = &self.mean + &gain * (reward - alpha.dot(&self.mean));
        let mut covariance = &self.covariance - &gain * s_alpha.transpose();
        symmetrize(&mut covariance);
        Ok(Self { mean, covariance })
    }

    pub fn cholesky_factor(&self) -> Result<DMatrix<f64>> {
        nalgebra::Cholesky::new(self.covariance.clone())
            .map(|c| c.unpack())
            .ok_or_else(|| {
                Error::Decomposition("posterior covariance is not positive definite".into())
            })
    }
}

fn symmetrize(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = avg;
            m[(j, i)] = avg;
        }
    }
}

/// Exact posterior of `x` after observing `rewards` from `arm`, starting from
/// `N(μ₀, σ₀² I)`.
///
/// The precision is `σ₀⁻² I + (n/σ_r²) ααᵀ`, a rank-one perturbation of a
/// scaled identity, so the covariance follows from Sherman–Morrison without a
/// general matrix inverse.
pub fn conjugate_update(
    prior: &GaussianPrior,
    arm: &Arm,
    rewards: &[f64],
) -> Result<ConjugatePosterior> {
    if prior.dim() != arm.dim() {
        return Err(Error::DimensionMismatch {
            expected: prior.dim(),
            got: arm.dim(),
        });
    }
    if let Some(r) = rewards.iter().find(|r| !r.is_finite()) {
        return Err(Error::invalid(format!("reward must be finite, got {r}")));
    }
    if rewards.is_empty() {
        return Ok(ConjugatePosterior::from_prior(prior));
    }
    let noise = arm.reward_noise_var();
    if noise <= 0.0 {
        return Err(Error::invalid(
            "conjugate update needs a positive reward noise variance",
        ));
    }
    let d = prior.dim();
    let a = 1.0 / prior.var();
    let c = rewards.len() as f64 / noise;
    let total: f64 = rewards.iter().sum();
    let alpha = DVector::from_column_slice(arm.feature());
    let w2 = alpha.norm_squared();
    let shrink = c / (a + c * w2);

    // Σ = (1/a) (I − shrink · ααᵀ)
    let mut covariance = DMatrix::from_diagonal_element(d, d, 1.0 / a);
    for i in 0..d {
        for j in 0..d {
            covariance[(i, j)] -= shrink * alpha[i] * alpha[j] / a;
        }
    }
    // μ = Σ b with b = a μ₀ + (ΣR/σ_r²) α
    let b = DVector::from_column_slice(prior.mean()) * a + &alpha * (total / noise);
    let mean = (&b - &alpha * (shrink * alpha.dot(&b))) / a;
    Ok(ConjugatePosterior { mean, covariance })
}

/// Draws from the scaled posterior `N(μ_n, Σ_n / ρ)`.
pub fn sample_exact_posterior<R: Rng + ?Sized>(
    post: &ConjugatePosterior,
    scale: f64,
    rng: &mut R,
) -> Result<Vec<f64>> {
    let factor = post.cholesky_factor()?;
    sample_with_factor(&post.mean, &factor, scale, rng)
}

/// Same as [`sample_exact_posterior`] with a precomputed lower Cholesky factor.
pub fn sample_with_factor<R: Rng + ?Sized>(
    mean: &DVector<f64>,
    factor: &DMatrix<f64>,
    scale: f64,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::invalid(format!(
            "posterior scale must be positive, got {scale}"
        )));
    }
    let d = mean.len();
    let z = DVector::from_fn(d, |_, _| rng.sample::<f64, _>(StandardNormal));
    let x = mean + (factor * z) / scale.sqrt();
    Ok(x.iter().copied().collect())
}
