//! Scenario definitions, parallel trajectory execution and result emission.

pub mod bootstrap;
pub mod config;
pub mod curves;
pub mod instance;
pub mod presets;
pub mod scenario;

pub use bootstrap::bootstrap_ci;
pub use config::{GammaSpec, PriorSpec, RhoSpec, ScenarioConfig, Variant, VariantSpec};
pub use curves::{emit_csv, parse_curves, read_csv, write_csv, AggregateCurve, CurveRow};
pub use instance::generate_instance;
pub use presets::{preset, Preset};
pub use scenario::{run_scenario, run_scenario_with_threads, ScenarioOutput};
