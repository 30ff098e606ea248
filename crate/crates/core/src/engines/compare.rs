use super::trace::{CascadeTrace, TraceInput};
use super::EngineError;

/// Stage-by-stage agreement between a classical and a quantum trace of the
/// same experiment.
///
/// Only dimensionless transmitted fractions are compared: classical
/// intensity over input intensity against cumulative pass probability.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub stage_differences: Vec<f64>,
    pub final_difference: f64,
    pub max_difference: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub fn compare(
    classical: &CascadeTrace,
    quantum: &CascadeTrace,
    tolerance: f64,
) -> Result<ComparisonReport, EngineError> {
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(EngineError::Comparison(format!(
            "tolerance must be finite and nonnegative, got {tolerance}"
        )));
    }
    match (classical.input, quantum.input) {
        (TraceInput::Unpolarized { .. }, TraceInput::Unpolarized { .. }) => {}
        (TraceInput::Linear { plane: a, .. }, TraceInput::PureKet { plane: b })
        | (TraceInput::Linear { plane: a, .. }, TraceInput::Linear { plane: b, .. })
        | (TraceInput::PureKet { plane: a }, TraceInput::PureKet { plane: b })
            if a == b => {}
        (a, b) => {
            return Err(EngineError::Comparison(format!(
                "input kinds differ: {a:?} vs {b:?}"
            )))
        }
    }
    if !classical.axes().eq(quantum.axes()) {
        return Err(EngineError::Comparison(format!(
            "filter stacks differ ({} vs {} stages)",
            classical.stages.len(),
            quantum.stages.len()
        )));
    }

    let stage_differences: Vec<f64> = classical
        .stage_fractions()
        .into_iter()
        .zip(quantum.stage_fractions())
        .map(|(c, q)| (c - q).abs())
        .collect();
    let final_difference =
        (classical.final_transmitted_fraction - quantum.final_transmitted_fraction).abs();
    let max_difference = stage_differences
        .iter()
        .copied()
        .fold(final_difference, f64::max);
    Ok(ComparisonReport {
        passed: max_difference <= tolerance,
        stage_differences,
        final_difference,
        max_difference,
        tolerance,
    })
}
