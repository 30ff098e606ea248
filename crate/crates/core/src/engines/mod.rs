//! Whole-stack evaluation.
//!
//! * [`run_classical`] folds Malus's law over the stack.
//! * [`run_quantum_exact`] multiplies Born-rule stage probabilities.
//! * [`run_monte_carlo`] samples individual photons.
//! * [`compare`] checks that the classical and quantum fractions agree.

mod classical;
mod compare;
mod montecarlo;
mod quantum;
mod staircase;
pub mod stats;
mod trace;

use thiserror::Error;

use crate::model::ModelError;

pub use classical::run_classical;
pub use compare::{compare, ComparisonReport};
pub use montecarlo::{
    run_monte_carlo, run_monte_carlo_with_workers, MonteCarloConfig, MonteCarloReport,
};
pub use quantum::{run_quantum_exact, QuantumInput};
pub use staircase::{staircase_stack, staircase_transmission};
pub use trace::{CascadeTrace, StageRecord, TraceInput};

/// Cumulative products over long stacks drift further than single-filter math.
pub const EQUIVALENCE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EngineError {
    #[error("photon count must be at least 1")]
    NoPhotons,
    #[error("staircase needs at least one filter")]
    EmptyStaircase,
    #[error("cannot compare traces: {0}")]
    Comparison(String),
    #[error("failed to start worker pool: {0}")]
    WorkerPool(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
