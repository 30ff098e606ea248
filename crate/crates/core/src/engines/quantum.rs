use crate::model::{
    density_pass_probability, density_project, ket, pass_probability, project, Angle,
    DensityMatrix2, FilterStack, PolarizationKet,
};

use super::trace::{CascadeTrace, StageRecord, TraceInput};

/// Photon state entering the stack in the quantum engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumInput {
    Unpolarized,
    PureKet(Angle),
}

enum PhotonState {
    Mixed(DensityMatrix2),
    Pure(PolarizationKet),
}

/// Exact Born-rule cascade: stage probabilities and their running product.
///
/// Once a stage has probability zero, no photon survives; later stages are
/// recorded with zero probability and no projection is attempted.
pub fn run_quantum_exact(input: QuantumInput, stack: &FilterStack) -> CascadeTrace {
    let mut state = match input {
        QuantumInput::Unpolarized => PhotonState::Mixed(DensityMatrix2::unpolarized()),
        QuantumInput::PureKet(plane) => PhotonState::Pure(ket(plane)),
    };
    let mut cumulative = 1.0;
    let mut extinguished = false;
    let mut stages = Vec::with_capacity(stack.len());

    for (i, &p) in stack.iter().enumerate() {
        let prob = if extinguished {
            0.0
        } else {
            match &state {
                PhotonState::Mixed(rho) => density_pass_probability(rho, p),
                PhotonState::Pure(s) => pass_probability(*s, p),
            }
        };
        if prob == 0.0 {
            extinguished = true;
            cumulative = 0.0;
        } else {
            cumulative *= prob;
            // density_project yields |axis⟩⟨axis|, carried on as its ket
            let next = match &state {
                PhotonState::Mixed(rho) => density_project(rho, p).map(|_| ket(p.axis)),
                PhotonState::Pure(s) => project(*s, p),
            };
            state = PhotonState::Pure(next.expect("nonzero pass probability"));
        }
        stages.push(StageRecord {
            stage_index: i + 1,
            axis: p.axis,
            classical_intensity_after: None,
            stage_pass_probability: Some(prob),
            cumulative_probability: Some(cumulative),
        });
    }

    let input = match input {
        QuantumInput::Unpolarized => TraceInput::Unpolarized { intensity: 1.0 },
        QuantumInput::PureKet(plane) => TraceInput::PureKet { plane },
    };
    CascadeTrace {
        input,
        stages,
        final_transmitted_fraction: cumulative,
    }
}
