//! Thompson sampling for multi-armed bandits with posterior samples drawn by
//! underdamped Langevin Monte Carlo.
//!
//! The crate is organised bottom-up:
//!
//! * [`bandit`]: linear-Gaussian bandit environment and its exact conjugate posterior.
//! * [`potential`]: per-arm negative log posterior, full and minibatch gradients,
//!   smoothness/convexity constants.
//! * [`langevin`]: exact-integration underdamped kernel, overdamped baseline and the
//!   warm-started per-round sampler.
//! * [`schedule`]: step size / step count / batch size schedules, posterior scales and
//!   concentration radii.
//! * [`thompson`]: the Thompson sampling loop for a single seeded trajectory.
//! * [`experiments`]: scenario configs, parallel trajectory execution, bootstrap
//!   confidence intervals and CSV output.

pub mod bandit;
pub mod error;
pub mod experiments;
pub mod langevin;
mod linalg;
pub mod potential;
pub mod schedule;
pub mod thompson;

pub use error::{Error, Result};
