//! Hyperparameter schedules and posterior-concentration radii.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Scale for exact sampling, `κ⁻³ / (8d)`.
pub fn rho_exact(kappa: f64, d: usize) -> f64 {
    1.0 / (kappa.powi(3) * 8.0 * d as f64)
}

/// `Ω = 16 d L² / (m ν) + 256`.
pub fn omega(d: usize, lipschitz_l: f64, convexity_m: f64, nu: f64) -> f64 {
    16.0 * d as f64 * lipschitz_l * lipschitz_l / (convexity_m * nu) + 256.0
}

/// Scale for approximate sampling, `1 / (8 κ Ω)`.
pub fn rho_approx(kappa: f64, d: usize, convexity_m: f64, nu: f64, lipschitz_l: f64) -> f64 {
    1.0 / (8.0 * kappa * omega(d, lipschitz_l, convexity_m, nu))
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < (-0.5f64).exp() {
        Ok(())
    } else {
        Err(Error::invalid(format!("delta must lie in (0, e^-0.5), got {delta}")))
    }
}

/// `√((2e/(m n)) (D + 2Ω log(1/δ)))`.
pub fn theorem1_radius(convexity_m: f64, n: usize, d_term: f64, omega: f64, delta: f64) -> Result<f64> {
    ConcentrationConstants {
        d_term,
        omega,
        prefactor: 2.0 * std::f64::consts::E,
        log_weight: 2.0,
    }
    .radius(convexity_m, n, delta)
}

/// Radius of a high-probability ball around the true parameter:
/// `√((prefactor/(m n)) (D + log_weight · Ω · log(1/δ)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConcentrationConstants {
    pub d_term: f64,
    pub omega: f64,
    pub prefactor: f64,
    pub log_weight: f64,
}

impl ConcentrationConstants {
    /// Exact (scaled) posterior: `D = 8d/ρ + 2 log B`, `Ω = 16κ²d + 256/ρ`.
    pub fn exact_posterior(d: usize, rho: f64, kappa: f64, log_b: f64) -> Self {
        let d = d as f64;
        Self {
            d_term: 8.0 * d / rho + 2.0 * log_b,
            omega: 16.0 * kappa * kappa * d + 256.0 / rho,
            prefactor: 2.0 * std::f64::consts::E,
            log_weight: 2.0,
        }
    }

    /// Output of the Langevin sampler with the approximate scale `ρ̂`.
    ///
    /// `Ω` is evaluated first, then `ρ̂ = 1/(8κΩ)`, then
    /// `Ω̂ = Ω + d/(36 κ ρ̂)`; `D = 8d + 2 log B`.
    pub fn approximate_posterior(d: usize, kappa: f64, lipschitz_l: f64, convexity_m: f64, nu: f64, log_b: f64) -> Self {
        let base = omega(d, lipschitz_l, convexity_m, nu);
        let rho_hat = 1.0 / (8.0 * kappa * base);
        let df = d as f64;
        Self {
            d_term: 8.0 * df + 2.0 * log_b,
            omega: base + df / (36.0 * kappa * rho_hat),
            prefactor: 36.0 * std::f64::consts::E,
            log_weight: 4.0,
        }
    }

    pub fn radius(&self, convexity_m: f64, n: usize, delta: f64) -> Result<f64> {
        check_delta(delta)?;
        if n == 0 {
            return Err(Error::invalid("radius needs at least one observation"));
        }
        if convexity_m.is_nan() || convexity_m <= 0.0 {
            return Err(Error::invalid("convexity constant must be positive"));
        }
        let bracket = self.d_term + self.log_weight * self.omega * (1.0 / delta).ln();
        Ok((self.prefactor / (convexity_m * n as f64) * bracket).sqrt())
    }
}

/// Tuning constants hidden by the `Õ(·)` orders of the theory schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScheduleConstants {
    pub c_h: f64,
    pub c_i: f64,
    pub c_k: f64,
    pub n_dependent_h: bool,
}

impl Default for ScheduleConstants {
    /// At `d = 10` these give `h ≈ 0.047` and `I = 10`.
    fn default() -> Self {
        Self {
            c_h: 0.15,
            c_i: 3.0,
            c_k: 1.0,
            n_dependent_h: false,
        }
    }
}

/// `h = c_h/√d` (optionally `/√n`), `I = ⌈c_I √d⌉`, `k = ⌈c_k κ²⌉`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheorySchedule {
    pub dim: usize,
    pub kappa: f64,
    pub constants: ScheduleConstants,
}

pub fn theory_schedule(d: usize, kappa: f64, constants: ScheduleConstants) -> TheorySchedule {
    TheorySchedule {
        dim: d.max(1),
        kappa,
        constants,
    }
}

impl TheorySchedule {
    pub fn step_h(&self, n: usize) -> f64 {
        let h = self.constants.c_h / (self.dim as f64).sqrt();
        if self.constants.n_dependent_h {
            h / (n.max(1) as f64).sqrt()
        } else {
            h
        }
    }

    pub fn steps_i(&self) -> usize {
        ((self.constants.c_i * (self.dim as f64).sqrt()).ceil() as usize).max(1)
    }

    /// Overdamped comparison budget `⌈c_I d⌉`.
    pub fn olmc_steps_i(&self) -> usize {
        ((self.constants.c_i * self.dim as f64).ceil() as usize).max(1)
    }

    pub fn batch_k(&self) -> usize {
        ((self.constants.c_k * self.kappa * self.kappa).ceil() as usize).max(1)
    }
}
