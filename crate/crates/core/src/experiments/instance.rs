use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::bandit::{Arm, BanditInstance};
use crate::error::{Error, Result};

/// Smallest gap between the optimal arm and any other arm.
pub const MIN_GAP: f64 = 0.2;

/// Random instance: features uniform on the unit sphere, true parameters
/// `N(0, I)`. The optimal arm's parameter is then pushed along its feature so
/// that every suboptimal gap is at least [`MIN_GAP`].
pub fn generate_instance(dim: usize, num_arms: usize, reward_noise_var: f64, seed: u64) -> Result<BanditInstance> {
    if dim == 0 || num_arms == 0 {
        return Err(Error::invalid("instance needs dim >= 1 and at least one arm"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut features = Vec::with_capacity(num_arms);
    let mut params = Vec::with_capacity(num_arms);
    for _ in 0..num_arms {
        let feature: Vec<f64> = if dim == 1 {
            vec![1.0]
        } else {
            let mut z: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
            let norm = z.iter().map(|v| v * v).sum::<f64>().sqrt();
            z.iter_mut().for_each(|v| *v /= norm);
            z
        };
        features.push(feature);
        params.push((0..dim).map(|_| StandardNormal.sample(&mut rng)).collect::<Vec<f64>>());
    }

    let reward = |f: &[f64], x: &[f64]| f.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
    let rewards: Vec<f64> = features.iter().zip(&params).map(|(f, x)| reward(f, x)).collect();
    let mut best = 0;
    for (i, &r) in rewards.iter().enumerate() {
        if r > rewards[best] {
            best = i;
        }
    }
    let min_gap = rewards
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .map(|(_, r)| rewards[best] - r)
        .fold(f64::INFINITY, f64::min);
    if min_gap < MIN_GAP {
        let shift = MIN_GAP - min_gap;
        let f = features[best].clone();
        params[best].iter_mut().zip(&f).for_each(|(x, a)| *x += shift * a);
    }

    let arms = features
        .into_iter()
        .zip(params)
        .map(|(f, x)| Arm::new(f, x, reward_noise_var))
        .collect::<Result<Vec<_>>>()?;
    BanditInstance::new(arms)
}
