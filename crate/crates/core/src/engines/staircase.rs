use crate::model::{Angle, FilterStack, Polarizer};

use super::quantum::{run_quantum_exact, QuantumInput};
use super::trace::CascadeTrace;
use super::EngineError;

/// `n` equally spaced polarizers rotating from `start` to `end`.
///
/// The first filter sits one step past `start` and the last one at `end`, so
/// a photon prepared along `start` sees `n` equal rotations of
/// `(end − start)/n` and passes with probability `cos²((end − start)/n)ⁿ`.
pub fn staircase_stack(n: usize, start: Angle, end: Angle) -> Result<FilterStack, EngineError> {
    if n < 1 {
        return Err(EngineError::EmptyStaircase);
    }
    let span = end.radians() - start.radians();
    let step = span / n as f64;
    (1..=n)
        .map(|k| {
            let r = if k == n {
                end.radians()
            } else {
                start.radians() + step * k as f64
            };
            Angle::from_radians(r)
                .map(Polarizer::new)
                .map_err(EngineError::Model)
        })
        .collect()
}

pub fn staircase_transmission(
    n: usize,
    start: Angle,
    end: Angle,
) -> Result<CascadeTrace, EngineError> {
    let stack = staircase_stack(n, start, end)?;
    Ok(run_quantum_exact(QuantumInput::PureKet(start), &stack))
}
