//! Parallel execution of a scenario and aggregation into regret curves.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::bootstrap::bootstrap_ci;
use super::config::{ScenarioConfig, Variant};
use super::curves::AggregateCurve;
use super::instance::generate_instance;
use crate::bandit::BanditInstance;
use crate::error::{Error, Result};
use crate::thompson::{run_trajectory, TrajectoryConfig};

pub const CI_LEVEL: f64 = 0.95;

/// Raw per-trajectory results of one variant, in seed order.
#[derive(Debug, Clone, PartialEq)]
pub struct VariantRuns {
    pub label: String,
    pub seeds: Vec<u64>,
    pub cumulative: Vec<Vec<f64>>,
    pub divergences: Vec<usize>,
}

impl VariantRuns {
    pub fn final_regrets(&self) -> Vec<f64> {
        self.cumulative.iter().map(|c| c.last().copied().unwrap_or(0.0)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutput {
    pub instance: Arc<BanditInstance>,
    pub curves: Vec<AggregateCurve>,
    pub runs: Vec<VariantRuns>,
}

impl ScenarioOutput {
    pub fn curve(&self, label: &str) -> Option<&AggregateCurve> {
        self.curves.iter().find(|c| c.label == label)
    }

    pub fn runs(&self, label: &str) -> Option<&VariantRuns> {
        self.runs.iter().find(|r| r.label == label)
    }
}

/// Runs on the global rayon pool.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioOutput> {
    config.validate()?;
    let instance = Arc::new(generate_instance(
        config.dim,
        config.arms,
        config.reward_noise_var,
        config.instance_seed,
    )?);
    let variants = config.variants()?;
    let prior = config.prior.build(config.dim)?;
    let jobs: Vec<(usize, u64)> = (0..variants.len())
        .flat_map(|v| (0..config.trajectories as u64).map(move |i| (v, config.seed.wrapping_add(i))))
        .collect();
    let traj_configs: Vec<TrajectoryConfig> = variants
        .iter()
        .map(|Variant { label, settings }| TrajectoryConfig {
            instance: Arc::clone(&instance),
            prior: prior.clone(),
            horizon: config.horizon,
            settings: settings.clone(),
            label: label.clone(),
        })
        .collect();

    // `collect` on an indexed parallel iterator keeps input order.
    let results: Vec<(Vec<f64>, usize)> = jobs
        .par_iter()
        .map(|&(v, seed)| {
            run_trajectory(&traj_configs[v], seed)
                .map(|r| (r.cumulative_series(), r.divergences))
                .map_err(|e| Error::Trajectory { seed, source: Box::new(e) })
        })
        .collect::<Result<_>>()?;

    let m = config.trajectories;
    let mut runs = Vec::with_capacity(variants.len());
    for (v, chunk) in results.chunks(m).enumerate() {
        runs.push(VariantRuns {
            label: variants[v].label.clone(),
            seeds: (0..m as u64).map(|i| config.seed.wrapping_add(i)).collect(),
            cumulative: chunk.iter().map(|(c, _)| c.clone()).collect(),
            divergences: chunk.iter().map(|&(_, d)| d).collect(),
        });
    }

    let hash = config.config_hash();
    let curves = runs
        .iter()
        .enumerate()
        .map(|(v, r)| aggregate(r, v as u64, config, hash))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScenarioOutput { instance, curves, runs })
}

/// Runs on a dedicated pool with `threads` workers; the output does not depend on `threads`.
pub fn run_scenario_with_threads(config: &ScenarioConfig, threads: usize) -> Result<ScenarioOutput> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    pool.install(|| run_scenario(config))
}

fn aggregate(runs: &VariantRuns, variant: u64, config: &ScenarioConfig, hash: u64) -> Result<AggregateCurve> {
    let m = runs.cumulative.len() as f64;
    let rounds: Vec<(f64, f64, f64)> = (0..config.horizon)
        .into_par_iter()
        .map(|t| {
            let column: Vec<f64> = runs.cumulative.iter().map(|c| c[t]).collect();
            let mean = column.iter().sum::<f64>() / m;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ 0x5eed_b007_57a9_0000);
            rng.set_stream((variant << 32) | t as u64);
            let (lo, hi) = bootstrap_ci(&column, config.bootstrap_resamples, CI_LEVEL, &mut rng)?;
            Ok((mean, lo, hi))
        })
        .collect::<Result<_>>()?;
    Ok(AggregateCurve {
        label: runs.label.clone(),
        mean: rounds.iter().map(|r| r.0).collect(),
        ci_low: rounds.iter().map(|r| r.1).collect(),
        ci_high: rounds.iter().map(|r| r.2).collect(),
        config_hash: hash,
    })
}
