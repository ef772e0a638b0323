//! Built-in regret comparison scenarios.

use std::str::FromStr;

use super::config::{GammaSpec, PriorName, PriorSpec, RhoSpec, ScenarioConfig, VariantSpec};
use crate::error::{Error, Result};
use crate::langevin::SamplerKind;
use crate::schedule::ScheduleConstants;

/// Trajectory count of the full-size runs.
pub const FULL_TRAJECTORIES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Same step size and step count for every sampler.
    Fig1a,
    /// Overdamped chains with smaller steps and larger budgets.
    Fig1b,
    /// Friction sweep.
    Fig1c,
    /// Flat prior.
    Fig1d,
    /// Dimension sweep for the underdamped sampler.
    Fig1e,
    /// High-dimensional head-to-head.
    Fig1f,
}

impl Preset {
    pub const ALL: [Preset; 6] = [Preset::Fig1a, Preset::Fig1b, Preset::Fig1c, Preset::Fig1d, Preset::Fig1e, Preset::Fig1f];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig1a => "fig1a",
            Preset::Fig1b => "fig1b",
            Preset::Fig1c => "fig1c",
            Preset::Fig1d => "fig1d",
            Preset::Fig1e => "fig1e",
            Preset::Fig1f => "fig1f",
        }
    }

    /// Named scenarios of this preset. `full` raises the trajectory count to
    /// [`FULL_TRAJECTORIES`] and adds the largest dimensions to the sweeps.
    pub fn scenarios(self, full: bool) -> Vec<(String, ScenarioConfig)> {
        let m = if full { FULL_TRAJECTORIES } else { 100 };
        match self {
            Preset::Fig1a => vec![(self.name().into(), fig1a(m))],
            Preset::Fig1b => vec![(self.name().into(), fig1b(m))],
            Preset::Fig1c => vec![(self.name().into(), fig1c(m))],
            Preset::Fig1d => vec![(self.name().into(), fig1d(m))],
            Preset::Fig1e => {
                let dims: &[usize] = if full { &[10, 30, 100, 300] } else { &[10, 30, 100] };
                dims.iter().map(|&d| (format!("fig1e_d{d}"), fig1e(d, m.min(if d >= 100 { 20 } else { m })))).collect()
            }
            Preset::Fig1f => {
                let dims: &[usize] = if full { &[100, 300] } else { &[100] };
                dims.iter().map(|&d| (format!("fig1f_d{d}"), fig1f(d, if full { 100 } else { 20 }))).collect()
            }
        }
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown preset {s:?}")))
    }
}

pub fn preset(name: &str, full: bool) -> Result<Vec<(String, ScenarioConfig)>> {
    Ok(Preset::from_str(name)?.scenarios(full))
}

/// Step size shared by the equal-budget comparisons.
pub const BASE_STEP_H: f64 = 0.05;
/// Gradient steps per round shared by the equal-budget comparisons.
pub const BASE_STEPS_I: usize = 10;
pub const BASE_BATCH_K: usize = 10;
pub const BASE_RHO: f64 = 1.0;

fn base(dim: usize, trajectories: usize) -> ScenarioConfig {
    ScenarioConfig {
        dim,
        arms: 10,
        horizon: 1000,
        trajectories,
        seed: 1,
        instance_seed: 2024,
        samplers: Vec::new(),
        gamma: GammaSpec::One(2.0),
        u: 1.0,
        step_h: Some(BASE_STEP_H),
        steps_i: Some(BASE_STEPS_I),
        batch_k: Some(BASE_BATCH_K),
        rho_mode: RhoSpec::Fixed(BASE_RHO),
        prior: PriorSpec::Isotropic { mean: 0.0, var: 1.0 },
        schedule: ScheduleConstants::default(),
        advance_unplayed: true,
        reward_noise_var: 1.0,
        bootstrap_resamples: super::config::DEFAULT_BOOTSTRAP_RESAMPLES,
        variants: Vec::new(),
    }
}

fn variant(label: &str, sampler: SamplerKind, step_h: f64, steps_i: usize) -> VariantSpec {
    VariantSpec {
        label: label.into(),
        sampler,
        gamma: None,
        u: None,
        step_h: Some(step_h),
        steps_i: Some(steps_i),
        batch_k: None,
        rho_mode: None,
    }
}

pub fn fig1a(m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![
            SamplerKind::UlmcFull,
            SamplerKind::UlmcStochastic,
            SamplerKind::OlmcFull,
            SamplerKind::OlmcStochastic,
            SamplerKind::ExactConjugate,
        ],
        ..base(10, m)
    }
}

pub fn fig1b(m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![SamplerKind::UlmcFull],
        variants: vec![
            variant("olmc_h0.05_i10", SamplerKind::OlmcFull, 0.05, 10),
            variant("olmc_h0.01_i50", SamplerKind::OlmcFull, 0.01, 50),
            variant("olmc_h0.001_i500", SamplerKind::OlmcFull, 0.001, 500),
        ],
        ..base(10, m)
    }
}

pub fn fig1c(m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![SamplerKind::UlmcFull],
        gamma: GammaSpec::Many(vec![0.1, 1.0, 2.0, 5.0, 10.0]),
        ..base(10, m)
    }
}

pub fn fig1d(m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![SamplerKind::UlmcFull, SamplerKind::OlmcFull, SamplerKind::ExactConjugate],
        prior: PriorSpec::Named(PriorName::Flat),
        ..base(10, m)
    }
}

pub fn fig1e(dim: usize, m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![SamplerKind::UlmcFull, SamplerKind::ExactConjugate],
        ..base(dim, m)
    }
}

pub fn fig1f(dim: usize, m: usize) -> ScenarioConfig {
    ScenarioConfig {
        samplers: vec![SamplerKind::UlmcFull, SamplerKind::OlmcFull],
        variants: vec![variant("olmc_full_i_prop_d", SamplerKind::OlmcFull, BASE_STEP_H / dim as f64, dim)],
        ..base(dim, m)
    }
}
