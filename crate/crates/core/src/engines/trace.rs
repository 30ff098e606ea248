use crate::model::Angle;

/// What entered the stack, as recorded by the engine that ran it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TraceInput {
    Unpolarized { intensity: f64 },
    Linear { plane: Angle, intensity: f64 },
    PureKet { plane: Angle },
}

impl TraceInput {
    /// Polarization plane of the input, `None` for unpolarized light.
    pub fn plane(&self) -> Option<Angle> {
        match *self {
            TraceInput::Unpolarized { .. } => None,
            TraceInput::Linear { plane, .. } | TraceInput::PureKet { plane } => Some(plane),
        }
    }
}

/// Result of one filter in a cascade. Classical runs fill
/// `classical_intensity_after`, quantum runs fill the two probabilities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StageRecord {
    /// 1-based position in the stack.
    pub stage_index: usize,
    pub axis: Angle,
    pub classical_intensity_after: Option<f64>,
    pub stage_pass_probability: Option<f64>,
    pub cumulative_probability: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CascadeTrace {
    pub input: TraceInput,
    pub stages: Vec<StageRecord>,
    /// Output intensity over input intensity (classical) or overall pass
    /// probability (quantum).
    pub final_transmitted_fraction: f64,
}

impl CascadeTrace {
    pub fn axes(&self) -> impl Iterator<Item = Angle> + '_ {
        self.stages.iter().map(|s| s.axis)
    }

    /// Per-stage transmitted fraction, whichever engine produced the trace.
    pub fn stage_fractions(&self) -> Vec<f64> {
        let input_intensity = match self.input {
            TraceInput::Unpolarized { intensity } | TraceInput::Linear { intensity, .. } => {
                intensity
            }
            TraceInput::PureKet { .. } => 1.0,
        };
        self.stages
            .iter()
            .map(
                |s| match (s.cumulative_probability, s.classical_intensity_after) {
                    (Some(p), _) => p,
                    (None, Some(i)) if input_intensity > 0.0 => i / input_intensity,
                    _ => 0.0,
                },
            )
            .collect()
    }
}
