use crate::model::{classical_transmit, BeamKind, ClassicalBeam, FilterStack};

use super::trace::{CascadeTrace, StageRecord, TraceInput};

/// Propagates a classical beam through the stack with Malus's law.
pub fn run_classical(input: ClassicalBeam, stack: &FilterStack) -> CascadeTrace {
    let mut beam = input;
    let stages = stack
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            beam = classical_transmit(beam, p);
            StageRecord {
                stage_index: i + 1,
                axis: p.axis,
                classical_intensity_after: Some(beam.intensity()),
                stage_pass_probability: None,
                cumulative_probability: None,
            }
        })
        .collect();

    let final_transmitted_fraction = if input.intensity() > 0.0 {
        beam.intensity() / input.intensity()
    } else {
        0.0
    };
    let input = match input.kind() {
        BeamKind::Unpolarized => TraceInput::Unpolarized {
            intensity: input.intensity(),
        },
        BeamKind::Linear(plane) => TraceInput::Linear {
            plane,
            intensity: input.intensity(),
        },
    };
    CascadeTrace {
        input,
        stages,
        final_transmitted_fraction,
    }
}
