//! TOML scenario configuration.

use serde::{Deserialize, Serialize};

use crate::bandit::GaussianPrior;
use crate::error::{Error, Result};
use crate::langevin::SamplerKind;
use crate::schedule::{theory_schedule, ScheduleConstants};
use crate::thompson::{BatchRule, RhoMode, SamplerSettings};

pub const DEFAULT_TRAJECTORIES: usize = 100;
pub const DEFAULT_BOOTSTRAP_RESAMPLES: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RhoName {
    Exact,
    Approx,
}

/// `rho_mode = "exact" | "approx" | <number>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RhoSpec {
    Named(RhoName),
    Fixed(f64),
}

impl Default for RhoSpec {
    fn default() -> Self {
        RhoSpec::Fixed(1.0)
    }
}

impl From<RhoSpec> for RhoMode {
    fn from(spec: RhoSpec) -> Self {
        match spec {
            RhoSpec::Named(RhoName::Exact) => RhoMode::Exact,
            RhoSpec::Named(RhoName::Approx) => RhoMode::Approx,
            RhoSpec::Fixed(r) => RhoMode::Fixed(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PriorName {
    Flat,
}

/// `prior = { mean = 0.0, var = 1.0 }` or `prior = "flat"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PriorSpec {
    Isotropic { mean: f64, var: f64 },
    Named(PriorName),
}

impl Default for PriorSpec {
    fn default() -> Self {
        PriorSpec::Isotropic { mean: 0.0, var: 1.0 }
    }
}

impl PriorSpec {
    pub fn build(&self, dim: usize) -> Result<GaussianPrior> {
        match *self {
            PriorSpec::Isotropic { mean, var } => GaussianPrior::isotropic(dim, mean, var),
            PriorSpec::Named(PriorName::Flat) => Ok(GaussianPrior::flat(dim)),
        }
    }
}

/// `gamma = 2.0` or `gamma = [0.1, 1.0, 2.0]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaSpec {
    One(f64),
    Many(Vec<f64>),
}

impl Default for GammaSpec {
    fn default() -> Self {
        GammaSpec::One(2.0)
    }
}

impl GammaSpec {
    pub fn values(&self) -> Vec<f64> {
        match self {
            GammaSpec::One(g) => vec![*g],
            GammaSpec::Many(gs) => gs.clone(),
        }
    }
}

/// One explicitly configured curve. Unset fields inherit the scenario-level value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantSpec {
    pub label: String,
    pub sampler: SamplerKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_h: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps_i: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batch_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_mode: Option<RhoSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub dim: usize,
    pub arms: usize,
    pub horizon: usize,
    #[serde(default = "default_trajectories")]
    pub trajectories: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub instance_seed: u64,
    #[serde(default)]
    pub samplers: Vec<SamplerKind>,
    #[serde(default)]
    pub gamma: GammaSpec,
    #[serde(default = "one")]
    pub u: f64,
    /// Falls back to the schedule's `c_h/√d`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_h: Option<f64>,
    /// Falls back to the schedule's `⌈c_I √d⌉`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps_i: Option<usize>,
    /// Falls back to the schedule's `⌈c_k κ²⌉`, evaluated per arm and round.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub batch_k: Option<usize>,
    #[serde(default)]
    pub rho_mode: RhoSpec,
    #[serde(default)]
    pub prior: PriorSpec,
    #[serde(default)]
    pub schedule: ScheduleConstants,
    #[serde(default = "yes")]
    pub advance_unplayed: bool,
    #[serde(default = "one")]
    pub reward_noise_var: f64,
    #[serde(default = "default_resamples")]
    pub bootstrap_resamples: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantSpec>,
}

fn default_trajectories() -> usize {
    DEFAULT_TRAJECTORIES
}

fn default_resamples() -> usize {
    DEFAULT_BOOTSTRAP_RESAMPLES
}

fn one() -> f64 {
    1.0
}

fn yes() -> bool {
    true
}

/// A labelled sampler configuration ready to run.
#[derive(Debug, Clone, PartialEq)]
pub struct Variant {
    pub label: String,
    pub settings: SamplerSettings,
}

impl ScenarioConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let config: ScenarioConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_toml_string(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.dim == 0 {
            return fail("dim must be at least 1".into());
        }
        if self.arms == 0 {
            return fail("arms must be at least 1".into());
        }
        if self.trajectories == 0 {
            return fail("trajectories must be at least 1".into());
        }
        if self.bootstrap_resamples == 0 {
            return fail("bootstrap_resamples must be at least 1".into());
        }
        if self.samplers.is_empty() && self.variants.is_empty() {
            return fail("no samplers configured".into());
        }
        if !(self.reward_noise_var >= 0.0 && self.reward_noise_var.is_finite()) {
            return fail(format!("reward_noise_var must be finite and >= 0, got {}", self.reward_noise_var));
        }
        if self.gamma.values().is_empty() {
            return fail("gamma list is empty".into());
        }
        let s = &self.schedule;
        for (name, v) in [("c_h", s.c_h), ("c_i", s.c_i), ("c_k", s.c_k)] {
            if !(v > 0.0 && v.is_finite()) {
                return fail(format!("schedule.{name} must be positive, got {v}"));
            }
        }
        self.prior.build(self.dim).map_err(|e| Error::Config(e.to_string()))?;
        let variants = self.variants()?;
        let mut labels: Vec<&str> = variants.iter().map(|v| v.label.as_str()).collect();
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return fail(format!("duplicate curve label {:?}", w[0]));
        }
        for v in &variants {
            if v.label.is_empty() || v.label.contains([',', '"', '\n', '\r']) {
                return fail(format!("curve label {:?} is not a plain CSV field", v.label));
            }
            v.settings
                .validate()
                .map_err(|e| Error::Config(format!("{}: {e}", v.label)))?;
            if v.settings.kind.is_langevin() && self.reward_noise_var <= 0.0 {
                return fail(format!("{}: Langevin samplers need reward_noise_var > 0", v.label));
            }
        }
        Ok(())
    }

    /// Curves to run, in a fixed order: every `samplers` entry (crossed with the
    /// `gamma` list for underdamped kinds) followed by the explicit `variants`.
    pub fn variants(&self) -> Result<Vec<Variant>> {
        let schedule = theory_schedule(self.dim, 1.0, self.schedule);
        let base_h = self.step_h.unwrap_or_else(|| schedule.step_h(1));
        let base_i = self.steps_i.unwrap_or_else(|| schedule.steps_i());
        let batch = |k: Option<usize>| match k {
            Some(k) => BatchRule::Fixed(k),
            None => BatchRule::Theory { c_k: self.schedule.c_k },
        };
        let settings = |kind: SamplerKind, gamma: f64, u: f64, h: f64, i: usize, k: Option<usize>, rho: RhoSpec| {
            SamplerSettings {
                kind,
                gamma,
                u,
                step_h: h,
                n_dependent_h: self.schedule.n_dependent_h,
                steps_i: i,
                batch: kind.is_stochastic().then(|| batch(k)),
                rho: rho.into(),
                advance_unplayed: self.advance_unplayed,
            }
        };

        let gammas = self.gamma.values();
        let mut out = Vec::new();
        for &kind in &self.samplers {
            let per_gamma = kind.is_underdamped() && gammas.len() > 1;
            let gs: &[f64] = if per_gamma { &gammas } else { &gammas[..1] };
            for &g in gs {
                let label = if per_gamma {
                    format!("{}_gamma{}", kind.name(), g)
                } else {
                    kind.name().to_string()
                };
                out.push(Variant {
                    label,
                    settings: settings(kind, g, self.u, base_h, base_i, self.batch_k, self.rho_mode),
                });
            }
        }
        for v in &self.variants {
            out.push(Variant {
                label: v.label.clone(),
                settings: settings(
                    v.sampler,
                    v.gamma.unwrap_or(gammas[0]),
                    v.u.unwrap_or(self.u),
                    v.step_h.unwrap_or(base_h),
                    v.steps_i.unwrap_or(base_i),
                    v.batch_k.or(self.batch_k),
                    v.rho_mode.unwrap_or(self.rho_mode),
                ),
            });
        }
        Ok(out)
    }

    /// FNV-1a hash of the canonical TOML serialization.
    pub fn config_hash(&self) -> u64 {
        let text = self.to_toml_string().unwrap_or_default();
        fnv1a(text.as_bytes())
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}
