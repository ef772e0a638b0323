//! Thompson sampling over per-arm posteriors.
//!
//! Every round draws one parameter sample per arm (from the exact conjugate
//! posterior or from a warm-started Langevin chain), plays the arm whose sample
//! has the largest expected reward, observes a reward for that arm only and
//! accumulates the expected regret.

use std::sync::Arc;

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bandit::{
    expected_regret_increment, sample_reward, sample_with_factor, BanditInstance,
    ConjugatePosterior, GaussianPrior, RewardHistory,
};
use crate::error::{Error, Result};
use crate::langevin::{run_round, ChainState, SamplerKind, UlmcParams};
use crate::linalg::dot;
use crate::potential::{constants_for, PotentialSpec};
use crate::schedule::{rho_approx, rho_exact};

/// How the posterior scale `ρ` is chosen for each arm and round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RhoMode {
    /// `κ⁻³/(8d)` from the arm's current constants.
    Exact,
    /// `1/(8κΩ)` from the arm's current constants.
    Approx,
    Fixed(f64),
}

impl RhoMode {
    pub fn resolve(&self, spec: &PotentialSpec) -> f64 {
        match *self {
            RhoMode::Exact => rho_exact(spec.condition_kappa, spec.dim()),
            RhoMode::Approx => rho_approx(
                spec.condition_kappa,
                spec.dim(),
                spec.convexity_m,
                spec.reward_convexity_nu,
                spec.lipschitz_l,
            ),
            RhoMode::Fixed(rho) => rho,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BatchRule {
    Fixed(usize),
    /// `⌈c_k κ²⌉` with the arm's current condition number.
    Theory { c_k: f64 },
}

impl BatchRule {
    fn resolve(&self, spec: &PotentialSpec) -> usize {
        match *self {
            BatchRule::Fixed(k) => k,
            BatchRule::Theory { c_k } => {
                let k = (c_k * spec.condition_kappa * spec.condition_kappa).ceil();
                if k >= usize::MAX as f64 {
                    usize::MAX
                } else {
                    (k as usize).max(1)
                }
            }
        }
    }
}

/// Everything that determines how one sampler variant draws posterior samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplerSettings {
    pub kind: SamplerKind,
    pub gamma: f64,
    /// Noise amplitude in units of `1/L_U`, where `L_U = max(𝓛_a, 1)·L_a` is
    /// the Lipschitz constant of the arm's full potential; `u = 1` is the
    /// `u = 1/L` choice.
    pub u: f64,
    pub step_h: f64,
    /// Divide `step_h` by `√max(𝓛_a, 1)`.
    pub n_dependent_h: bool,
    pub steps_i: usize,
    pub batch: Option<BatchRule>,
    pub rho: RhoMode,
    /// Advance every arm's chain each round; otherwise an arm whose data did
    /// not change since its last draw reuses that draw.
    pub advance_unplayed: bool,
}

impl SamplerSettings {
    pub fn validate(&self) -> Result<()> {
        if let RhoMode::Fixed(rho) = self.rho {
            if !(rho > 0.0 && rho.is_finite()) {
                return Err(Error::invalid(format!("rho must be positive, got {rho}")));
            }
        }
        if !self.kind.is_langevin() {
            return Ok(());
        }
        let params = UlmcParams {
            gamma: self.gamma,
            u: self.u,
            step_h: self.step_h,
            steps_i: self.steps_i,
            batch_k: match self.batch {
                Some(BatchRule::Fixed(k)) => Some(k),
                _ => None,
            },
            scale_rho: 1.0,
        };
        params.validate()?;
        if self.kind.is_stochastic() {
            match self.batch {
                None => return Err(Error::invalid(format!("{} needs a batch size", self.kind))),
                Some(BatchRule::Theory { c_k }) if !(c_k > 0.0 && c_k.is_finite()) => {
                    return Err(Error::invalid("c_k must be positive"))
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn params_for(&self, spec: &PotentialSpec, rho: f64) -> UlmcParams {
        let pulls = spec.pulls.max(1) as f64;
        UlmcParams {
            gamma: self.gamma,
            u: self.u / spec.potential_lipschitz(),
            step_h: if self.n_dependent_h {
                self.step_h / pulls.sqrt()
            } else {
                self.step_h
            },
            steps_i: self.steps_i,
            batch_k: self.batch.map(|b| b.resolve(spec)),
            scale_rho: rho,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TrajectoryConfig {
    pub instance: Arc<BanditInstance>,
    pub prior: GaussianPrior,
    pub horizon: usize,
    pub settings: SamplerSettings,
    pub label: String,
}

impl TrajectoryConfig {
    pub fn validate(&self) -> Result<()> {
        if self.prior.dim() != self.instance.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.instance.dim(),
                got: self.prior.dim(),
            });
        }
        if self.instance.arms().iter().any(|a| a.reward_noise_var() <= 0.0)
            && self.settings.kind.is_langevin()
        {
            return Err(Error::invalid("Langevin samplers need positive reward noise"));
        }
        self.settings.validate()
    }
}

#[derive(Debug, Clone)]
pub struct ArmState {
    pub chain: ChainState,
    pub spec: PotentialSpec,
    pub conjugate: ConjugatePosterior,
    factor: Option<DMatrix<f64>>,
    last_sample: Option<Vec<f64>>,
    data_changed: bool,
}

impl ArmState {
    pub fn new(chain: ChainState, spec: PotentialSpec, conjugate: ConjugatePosterior) -> Self {
        Self {
            chain,
            spec,
            conjugate,
            factor: None,
            last_sample: None,
            data_changed: true,
        }
    }

    pub fn last_sample(&self) -> Option<&[f64]> {
        self.last_sample.as_deref()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundLog {
    pub round_n: usize,
    pub chosen_arm: usize,
    pub reward: f64,
    pub regret_increment: f64,
    pub cumulative_regret: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryResult {
    pub seed: u64,
    pub label: String,
    pub sampler: SamplerKind,
    pub rounds: Vec<RoundLog>,
    /// Number of times a chain left the finite range and was restarted from the prior.
    pub divergences: usize,
}

impl TrajectoryResult {
    pub fn final_regret(&self) -> f64 {
        self.rounds.last().map_or(0.0, |r| r.cumulative_regret)
    }

    pub fn regret_at(&self, round: usize) -> f64 {
        if round == 0 {
            return 0.0;
        }
        self.rounds[round - 1].cumulative_regret
    }

    pub fn cumulative_series(&self) -> Vec<f64> {
        self.rounds.iter().map(|r| r.cumulative_regret).collect()
    }
}

/// Index of the largest `⟨α_a, x_a⟩`, ties to the lowest index. A NaN score
/// (from a diverged chain) ranks below every number.
pub fn select_arm(samples: &[Vec<f64>], features: &[&[f64]]) -> Result<usize> {
    if samples.is_empty() {
        return Err(Error::invalid("cannot select from an empty arm list"));
    }
    if samples.len() != features.len() {
        return Err(Error::invalid(format!(
            "{} samples for {} arms",
            samples.len(),
            features.len()
        )));
    }
    let mut best = 0;
    let mut best_score = f64::NEG_INFINITY;
    for (i, (x, alpha)) in samples.iter().zip(features).enumerate() {
        if x.len() != alpha.len() {
            return Err(Error::DimensionMismatch {
                expected: alpha.len(),
                got: x.len(),
            });
        }
        let mut score = dot(alpha, x);
        if score.is_nan() {
            score = f64::NEG_INFINITY;
        }
        if i == 0 || score > best_score {
            best = i;
            best_score = score;
        }
    }
    Ok(best)
}

/// Mutable state of one trajectory: arm states, reward history, running regret.
pub struct Trajectory<'a> {
    config: &'a TrajectoryConfig,
    arms: Vec<ArmState>,
    history: RewardHistory,
    rng: ChaCha8Rng,
    round: usize,
    cumulative: f64,
    divergences: usize,
}

impl<'a> Trajectory<'a> {
    /// Chains start at a prior draw with zero velocity.
    pub fn new(config: &'a TrajectoryConfig, seed: u64) -> Result<Self> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let instance = &config.instance;
        let needs_potential = config.settings.kind.is_langevin();
        let mut arms = Vec::with_capacity(instance.num_arms());
        for arm in instance.arms() {
            let chain = ChainState::at_rest(config.prior.sample(&mut rng));
            // Exact sampling never touches the potential, so a noiseless arm is fine there.
            let spec = if needs_potential {
                constants_for(arm, &config.prior, 0)?
            } else {
                prior_only_spec(arm, &config.prior)
            };
            arms.push(ArmState::new(chain, spec, ConjugatePosterior::from_prior(&config.prior)));
        }
        Ok(Self {
            config,
            history: RewardHistory::new(arms.len()),
            arms,
            rng,
            round: 0,
            cumulative: 0.0,
            divergences: 0,
        })
    }

    pub fn arms(&self) -> &[ArmState] {
        &self.arms
    }

    pub fn history(&self) -> &RewardHistory {
        &self.history
    }

    pub fn divergences(&self) -> usize {
        self.divergences
    }

    fn draw(&mut self, a: usize) -> Result<Vec<f64>> {
        let settings = &self.config.settings;
        let pulls = self.history.pulls(a)?;
        let state = &mut self.arms[a];
        let has_potential = state.spec.arm.reward_noise_var() > 0.0;
        if has_potential && state.spec.pulls != pulls {
            state.spec = constants_for(&state.spec.arm, &self.config.prior, pulls)?;
        }

        if settings.kind == SamplerKind::ExactConjugate {
            if state.factor.is_none() {
                state.factor = Some(state.conjugate.cholesky_factor()?);
            }
            let rho = match settings.rho {
                RhoMode::Fixed(r) => r,
                mode if has_potential => mode.resolve(&state.spec),
                _ => 1.0,
            };
            let factor = state.factor.as_ref().expect("factor cached above");
            return sample_with_factor(&state.conjugate.mean, factor, rho, &mut self.rng);
        }

        if !settings.advance_unplayed && !state.data_changed {
            if let Some(x) = &state.last_sample {
                return Ok(x.clone());
            }
        }
        let rho = settings.rho.resolve(&state.spec);
        let params = settings.params_for(&state.spec, rho);
        let next = run_round(
            &state.chain,
            &state.spec,
            self.history.arm(a)?,
            &params,
            settings.kind,
            pulls.max(1),
            &mut self.rng,
        )?;
        let sample = next.position.clone();
        if next.is_finite() {
            state.chain = next;
        } else {
            state.chain = ChainState::at_rest(self.config.prior.sample(&mut self.rng));
            self.divergences += 1;
        }
        state.data_changed = false;
        Ok(sample)
    }

    /// Plays round `n = self.round + 1`.
    pub fn play_round(&mut self) -> Result<RoundLog> {
        let k = self.arms.len();
        let mut samples = Vec::with_capacity(k);
        for a in 0..k {
            let x = self.draw(a)?;
            self.arms[a].last_sample = Some(x.clone());
            samples.push(x);
        }
        let instance = &self.config.instance;
        let features: Vec<&[f64]> = instance.arms().iter().map(|a| a.feature()).collect();
        let chosen = select_arm(&samples, &features)?;
        let reward = sample_reward(instance, chosen, &mut self.rng)?;
        self.history.push(chosen, reward)?;

        let arm = &instance.arms()[chosen];
        let state = &mut self.arms[chosen];
        // A noiseless observation has no conjugate update; the posterior is kept.
        if arm.reward_noise_var() > 0.0 {
            state.conjugate = state.conjugate.observe(arm, reward)?;
        }
        state.factor = None;
        state.data_changed = true;

        let regret_increment = expected_regret_increment(instance, chosen)?;
        self.cumulative += regret_increment;
        self.round += 1;
        Ok(RoundLog {
            round_n: self.round,
            chosen_arm: chosen,
            reward,
            regret_increment,
            cumulative_regret: self.cumulative,
        })
    }
}

fn prior_only_spec(arm: &crate::bandit::Arm, prior: &GaussianPrior) -> PotentialSpec {
    let prec = 1.0 / prior.var();
    PotentialSpec {
        arm: arm.clone(),
        prior: prior.clone(),
        pulls: 0,
        lipschitz_l: prec,
        convexity_m: prec,
        reward_convexity_nu: if arm.reward_noise_var() > 0.0 {
            1.0 / arm.reward_noise_var()
        } else {
            f64::INFINITY
        },
        condition_kappa: 1.0,
        prior_quality_log_b: crate::linalg::dist_sq(arm.true_param(), prior.mean()) / (2.0 * prior.var()),
    }
}

/// Runs `config.horizon` rounds; fully determined by `(config, seed)`.
pub fn run_trajectory(config: &TrajectoryConfig, seed: u64) -> Result<TrajectoryResult> {
    let mut traj = Trajectory::new(config, seed)?;
    let mut rounds = Vec::with_capacity(config.horizon);
    for _ in 0..config.horizon {
        rounds.push(traj.play_round()?);
    }
    Ok(TrajectoryResult {
        seed,
        label: config.label.clone(),
        sampler: config.settings.kind,
        rounds,
        divergences: traj.divergences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bandit::Arm;

    fn settings(kind: SamplerKind) -> SamplerSettings {
        SamplerSettings {
            kind,
            gamma: 2.0,
            u: 1.0,
            step_h: 0.05,
            n_dependent_h: false,
            steps_i: 5,
            batch: Some(BatchRule::Fixed(3)),
            rho: RhoMode::Fixed(1.0),
            advance_unplayed: true,
        }
    }

    fn config(instance: BanditInstance, kind: SamplerKind, horizon: usize) -> TrajectoryConfig {
        let d = instance.dim();
        TrajectoryConfig {
            instance: Arc::new(instance),
            prior: GaussianPrior::isotropic(d, 0.0, 1.0).unwrap(),
            horizon,
            settings: settings(kind),
            label: kind.name().into(),
        }
    }

    #[test]
    fn select_arm_basic() {
        let f: Vec<&[f64]> = vec![&[1.0], &[1.0], &[1.0]];
        let s = vec![vec![1.0], vec![3.0], vec![2.0]];
        assert_eq!(select_arm(&s, &f).unwrap(), 1);
        assert_eq!(select_arm(&s[..1], &f[..1]).unwrap(), 0);
        assert!(select_arm(&[], &[]).is_err());
        let ties = vec![vec![2.0], vec![2.0], vec![1.0]];
        assert_eq!(select_arm(&ties, &f).unwrap(), 0);
    }

    #[test]
    fn select_arm_ranks_nan_last() {
        let f: Vec<&[f64]> = vec![&[1.0], &[1.0]];
        let s = vec![vec![f64::NAN], vec![-5.0]];
        assert_eq!(select_arm(&s, &f).unwrap(), 1);
        let s = vec![vec![f64::NAN], vec![f64::NAN]];
        assert_eq!(select_arm(&s, &f).unwrap(), 0);
    }

    #[test]
    fn single_arm_has_zero_regret() {
        let inst = BanditInstance::new(vec![Arm::new(vec![1.0, 0.0], vec![0.5, 0.5], 1.0).unwrap()]).unwrap();
        for kind in SamplerKind::ALL {
            let res = run_trajectory(&config(inst.clone(), kind, 20), 3).unwrap();
            assert!(res.rounds.iter().all(|r| r.chosen_arm == 0 && r.regret_increment == 0.0));
        }
    }

    #[test]
    fn empty_horizon() {
        let inst = BanditInstance::new(vec![Arm::new(vec![1.0], vec![0.5], 1.0).unwrap()]).unwrap();
        let res = run_trajectory(&config(inst, SamplerKind::UlmcFull, 0), 3).unwrap();
        assert!(res.rounds.is_empty());
        assert_eq!(res.final_regret(), 0.0);
    }

    #[test]
    fn config_errors_surface_before_round_one() {
        let inst = BanditInstance::new(vec![Arm::new(vec![1.0], vec![0.5], 1.0).unwrap()]).unwrap();
        let mut cfg = config(inst, SamplerKind::UlmcStochastic, 5);
        cfg.settings.batch = None;
        assert!(run_trajectory(&cfg, 1).is_err());
        cfg.settings.batch = Some(BatchRule::Fixed(2));
        cfg.settings.step_h = 1.5;
        assert!(run_trajectory(&cfg, 1).is_err());
    }

    #[test]
    fn theory_batch_rule() {
        let arm = Arm::new(vec![1.0], vec![0.0], 1.0).unwrap();
        let prior = GaussianPrior::isotropic(1, 0.0, 1.0).unwrap();
        let spec = constants_for(&arm, &prior, 2).unwrap();
        // κ = (1 + 1/2)/(1/2) = 3
        assert_eq!(BatchRule::Theory { c_k: 1.0 }.resolve(&spec), 9);
    }
}
