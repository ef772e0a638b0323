//! Underdamped Langevin transition kernel and the per-round sampler.
//!
//! Between gradient evaluations the gradient is frozen and the dynamics
//!
//! ```text
//! dv = −γ v dt − u ∇U(x_i) dt + √(2γu) dB,    dx = v dt
//! ```
//!
//! are integrated exactly over a step `h`, giving a Gaussian transition whose
//! mean and covariance are scalar multiples of the identity. Each coordinate
//! therefore only needs a 2×2 Cholesky factor.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::bandit::ArmHistory;
use crate::error::{Error, Result};
use crate::linalg::all_finite;
use crate::potential::{grad_full_into, grad_stochastic_into, PotentialSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerKind {
    UlmcFull,
    UlmcStochastic,
    OlmcFull,
    OlmcStochastic,
    ExactConjugate,
}

impl SamplerKind {
    pub const ALL: [SamplerKind; 5] = [
        SamplerKind::UlmcFull,
        SamplerKind::UlmcStochastic,
        SamplerKind::OlmcFull,
        SamplerKind::OlmcStochastic,
        SamplerKind::ExactConjugate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SamplerKind::UlmcFull => "ulmc_full",
            SamplerKind::UlmcStochastic => "ulmc_stochastic",
            SamplerKind::OlmcFull => "olmc_full",
            SamplerKind::OlmcStochastic => "olmc_stochastic",
            SamplerKind::ExactConjugate => "exact_conjugate",
        }
    }

    pub fn is_underdamped(self) -> bool {
        matches!(self, SamplerKind::UlmcFull | SamplerKind::UlmcStochastic)
    }

    pub fn is_stochastic(self) -> bool {
        matches!(self, SamplerKind::UlmcStochastic | SamplerKind::OlmcStochastic)
    }

    pub fn is_langevin(self) -> bool {
        self != SamplerKind::ExactConjugate
    }
}

impl std::fmt::Display for SamplerKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SamplerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SamplerKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown sampler kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UlmcParams {
    pub gamma: f64,
    pub u: f64,
    pub step_h: f64,
    pub steps_i: usize,
    pub batch_k: Option<usize>,
    pub scale_rho: f64,
}

impl UlmcParams {
    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must be positive and finite, got {v}")))
            }
        };
        positive("gamma", self.gamma)?;
        positive("u", self.u)?;
        positive("scale_rho", self.scale_rho)?;
        if !(self.step_h > 0.0 && self.step_h < 1.0) {
            return Err(Error::invalid(format!(
                "step size must lie in (0, 1), got {}",
                self.step_h
            )));
        }
        if self.steps_i == 0 {
            return Err(Error::invalid("number of steps must be at least 1"));
        }
        if self.batch_k == Some(0) {
            return Err(Error::invalid("batch size must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainState {
    pub position: Vec<f64>,
    pub velocity: Vec<f64>,
}

impl ChainState {
    pub fn new(position: Vec<f64>, velocity: Vec<f64>) -> Result<Self> {
        if position.len() != velocity.len() {
            return Err(Error::DimensionMismatch {
                expected: position.len(),
                got: velocity.len(),
            });
        }
        Ok(Self { position, velocity })
    }

    pub fn at_rest(position: Vec<f64>) -> Self {
        let velocity = vec![0.0; position.len()];
        Self { position, velocity }
    }

    pub fn dim(&self) -> usize {
        self.position.len()
    }

    pub fn is_finite(&self) -> bool {
        all_finite(&self.position) && all_finite(&self.velocity)
    }
}

/// Closed-form mean and covariance coefficients of one exact-integration step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelCoefficients {
    pub mean_vv: f64,
    pub mean_vg: f64,
    pub mean_xv: f64,
    pub mean_xg: f64,
    pub var_x: f64,
    pub var_v: f64,
    pub cov_xv: f64,
}

/// Lower Cholesky factor of the per-coordinate `[[var_x, cov], [cov, var_v]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelFactor {
    pub l11: f64,
    pub l21: f64,
    pub l22: f64,
}

impl KernelCoefficients {
    pub fn determinant(&self) -> f64 {
        self.var_x * self.var_v - self.cov_xv * self.cov_xv
    }

    pub fn factor(&self) -> Result<KernelFactor> {
        if self.var_x < 0.0 || self.var_v < 0.0 {
            return Err(Error::Invariant(format!(
                "negative kernel variance: var_x={}, var_v={}",
                self.var_x, self.var_v
            )));
        }
        let l11 = self.var_x.sqrt();
        let l21 = if l11 > 0.0 {
            self.cov_xv / l11
        } else if self.cov_xv == 0.0 {
            0.0
        } else {
            return Err(Error::Invariant("zero position variance with nonzero covariance".into()));
        };
        let schur = self.var_v - l21 * l21;
        if schur < -1e-12 * self.var_v.max(f64::MIN_POSITIVE) {
            return Err(Error::Invariant(format!(
                "kernel covariance is not positive semi-definite (schur complement {schur})"
            )));
        }
        Ok(KernelFactor {
            l11,
            l21,
            l22: schur.max(0.0).sqrt(),
        })
    }
}

const SERIES_CUTOFF: f64 = 1.0;

/// `z − 1 + e^{−z}`, accurate for small `z`.
fn phi2(z: f64) -> f64 {
    if z >= SERIES_CUTOFF {
        return z + (-z).exp_m1();
    }
    // Σ_{k≥2} (−z)^k / k!
    let mut term = z * z / 2.0;
    let mut sum = term;
    for k in 3..40 {
        term *= -z / k as f64;
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() * 1e-3 {
            break;
        }
    }
    sum
}

/// `z − 3/2 + 2e^{−z} − e^{−2z}/2`, accurate for small `z`.
fn phi3(z: f64) -> f64 {
    if z >= SERIES_CUTOFF {
        return z - 1.5 + 2.0 * (-z).exp() - 0.5 * (-2.0 * z).exp();
    }
    // Σ_{k≥3} (−1)^{k+1} (2^{k−1} − 2) z^k / k!
    let mut zk_over_fact = z * z * z / 6.0;
    let mut pow2 = 4.0;
    let mut sum = 0.0;
    for k in 3..60 {
        if k > 3 {
            zk_over_fact *= z / k as f64;
            pow2 *= 2.0;
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = sign * (pow2 - 2.0) * zk_over_fact;
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() * 1e-3 {
            break;
        }
    }
    sum
}

/// Mean/covariance coefficients of one step of length `step_h`.
pub fn kernel_coefficients(gamma: f64, u: f64, step_h: f64) -> Result<KernelCoefficients> {
    if !(gamma > 0.0 && gamma.is_finite()) {
        return Err(Error::invalid(format!("gamma must be positive, got {gamma}")));
    }
    if !(u > 0.0 && u.is_finite()) {
        return Err(Error::invalid(format!("u must be positive, got {u}")));
    }
    if !(step_h >= 0.0 && step_h.is_finite()) {
        return Err(Error::invalid(format!("step size must be non-negative, got {step_h}")));
    }
    let z = gamma * step_h;
    let em1 = (-z).exp_m1(); // e^{−γh} − 1
    Ok(KernelCoefficients {
        mean_vv: (-z).exp(),
        mean_vg: u / gamma * em1,
        mean_xv: -em1 / gamma,
        mean_xg: -u / (gamma * gamma) * phi2(z),
        var_x: 2.0 * u / (gamma * gamma) * phi3(z),
        var_v: -u * (-2.0 * z).exp_m1(),
        // (u/γ)(1 + e^{−2γh} − 2e^{−γh}) = (u/γ)(1 − e^{−γh})²
        cov_xv: u / gamma * em1 * em1,
    })
}

/// Deterministic part of the transition driven by standard-normal inputs
/// `noise[2i]`, `noise[2i + 1]` for coordinate `i`.
pub fn ulmc_transition(
    state: &ChainState,
    grad: &[f64],
    coeffs: &KernelCoefficients,
    factor: &KernelFactor,
    noise: &[f64],
) -> Result<ChainState> {
    let d = state.dim();
    if grad.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: grad.len() });
    }
    if noise.len() != 2 * d {
        return Err(Error::DimensionMismatch { expected: 2 * d, got: noise.len() });
    }
    let mut next = state.clone();
    for i in 0..d {
        let (z1, z2) = (noise[2 * i], noise[2 * i + 1]);
        apply_coordinate(&mut next, i, grad[i], coeffs, factor, z1, z2);
    }
    Ok(next)
}

#[inline]
fn apply_coordinate(
    state: &mut ChainState,
    i: usize,
    g: f64,
    c: &KernelCoefficients,
    f: &KernelFactor,
    z1: f64,
    z2: f64,
) {
    let x = state.position[i];
    let v = state.velocity[i];
    state.position[i] = x + c.mean_xv * v + c.mean_xg * g + f.l11 * z1;
    state.velocity[i] = c.mean_vv * v + c.mean_vg * g + f.l21 * z1 + f.l22 * z2;
}

#[inline]
fn ulmc_step_in_place<R: Rng + ?Sized>(
    state: &mut ChainState,
    grad: &[f64],
    coeffs: &KernelCoefficients,
    factor: &KernelFactor,
    rng: &mut R,
) {
    for (i, &g) in grad.iter().enumerate() {
        let z1: f64 = rng.sample(StandardNormal);
        let z2: f64 = rng.sample(StandardNormal);
        apply_coordinate(state, i, g, coeffs, factor, z1, z2);
    }
}

/// One exact-integration step from `state` with the gradient `∇U(x_i)`
/// frozen over the step.
pub fn ulmc_step<R: Rng + ?Sized>(
    state: &ChainState,
    grad: &[f64],
    params: &UlmcParams,
    rng: &mut R,
) -> Result<ChainState> {
    if grad.len() != state.dim() {
        return Err(Error::DimensionMismatch { expected: state.dim(), got: grad.len() });
    }
    let coeffs = kernel_coefficients(params.gamma, params.u, params.step_h)?;
    let factor = coeffs.factor()?;
    let mut next = state.clone();
    ulmc_step_in_place(&mut next, grad, &coeffs, &factor, rng);
    Ok(next)
}

#[inline]
fn olmc_step_in_place<R: Rng + ?Sized>(state: &mut ChainState, grad: &[f64], step_h: f64, rng: &mut R) {
    let noise_sd = (2.0 * step_h).sqrt();
    for (i, &g) in grad.iter().enumerate() {
        let z: f64 = rng.sample(StandardNormal);
        state.position[i] += -step_h * g + noise_sd * z;
        state.velocity[i] = 0.0;
    }
}

/// Overdamped (Euler–Maruyama) step `x − h∇U(x) + √(2h) ξ`; velocity is zeroed.
pub fn olmc_step<R: Rng + ?Sized>(
    state: &ChainState,
    grad: &[f64],
    step_h: f64,
    rng: &mut R,
) -> Result<ChainState> {
    if grad.len() != state.dim() {
        return Err(Error::DimensionMismatch { expected: state.dim(), got: grad.len() });
    }
    if !(step_h >= 0.0 && step_h.is_finite()) {
        return Err(Error::invalid(format!("step size must be non-negative, got {step_h}")));
    }
    let mut next = state.clone();
    olmc_step_in_place(&mut next, grad, step_h, rng);
    Ok(next)
}

/// One round of the warm-started sampler for a single arm.
///
/// Runs `steps_i` gradient/transition iterations from `start` (full or
/// minibatch gradients according to `kind`), then resamples the position as
/// `N(x_I, I/(n L ρ))` and keeps `v_I`. Overdamped kinds ignore `gamma`/`u`
/// and return zero velocity.
pub fn run_round<R: Rng + ?Sized>(
    start: &ChainState,
    spec: &PotentialSpec,
    history: &ArmHistory,
    params: &UlmcParams,
    kind: SamplerKind,
    n: usize,
    rng: &mut R,
) -> Result<ChainState> {
    if !kind.is_langevin() {
        return Err(Error::invalid("run_round needs a Langevin sampler kind"));
    }
    if n == 0 {
        return Err(Error::invalid("round index must be at least 1"));
    }
    if params.steps_i == 0 {
        return Err(Error::invalid("number of steps must be at least 1"));
    }
    if !(params.step_h >= 0.0 && params.step_h < 1.0) {
        return Err(Error::invalid(format!("step size must lie in [0, 1), got {}", params.step_h)));
    }
    if !(params.scale_rho > 0.0 && params.scale_rho.is_finite()) {
        return Err(Error::invalid(format!("scale must be positive, got {}", params.scale_rho)));
    }
    let d = spec.dim();
    if start.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: start.dim() });
    }
    let batch = if kind.is_stochastic() {
        match params.batch_k {
            Some(k) if k >= 1 => Some(k),
            _ => return Err(Error::invalid("stochastic sampler needs a batch size >= 1")),
        }
    } else {
        None
    };
    let kernel = if kind.is_underdamped() {
        let coeffs = kernel_coefficients(params.gamma, params.u, params.step_h)?;
        let factor = coeffs.factor()?;
        Some((coeffs, factor))
    } else {
        None
    };

    let mut state = start.clone();
    if !kind.is_underdamped() {
        state.velocity.iter_mut().for_each(|v| *v = 0.0);
    }
    let mut grad = vec![0.0; d];
    for _ in 0..params.steps_i {
        match batch {
            Some(k) => grad_stochastic_into(spec, &state.position, history, k, rng, &mut grad),
            None => grad_full_into(spec, &state.position, history, &mut grad),
        }
        match &kernel {
            Some((coeffs, factor)) => ulmc_step_in_place(&mut state, &grad, coeffs, factor, rng),
            None => olmc_step_in_place(&mut state, &grad, params.step_h, rng),
        }
    }

    let resample_sd = (1.0 / (n as f64 * spec.lipschitz_l * params.scale_rho)).sqrt();
    for x in state.position.iter_mut() {
        *x += resample_sd * rng.sample::<f64, _>(StandardNormal);
    }
    Ok(state)
}
