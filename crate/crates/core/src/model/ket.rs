use std::ops::Neg;

use super::optics::flush;
use super::{Angle, ModelError, Polarizer, TOLERANCE, ZERO_PROBABILITY};

/// Pure linear polarization state: real amplitudes over `|H⟩ = (1, 0)` and
/// `|V⟩ = (0, 1)`.
///
/// A ket and its negation describe the same photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationKet {
    amp_h: f64,
    amp_v: f64,
}

impl PolarizationKet {
    pub const H: PolarizationKet = PolarizationKet {
        amp_h: 1.0,
        amp_v: 0.0,
    };
    pub const V: PolarizationKet = PolarizationKet {
        amp_h: 0.0,
        amp_v: 1.0,
    };

    pub fn new(amp_h: f64, amp_v: f64) -> Result<Self, ModelError> {
        let norm_sq = amp_h * amp_h + amp_v * amp_v;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > TOLERANCE {
            return Err(ModelError::NotNormalized(norm_sq));
        }
        Ok(Self { amp_h, amp_v })
    }

    /// Diagonal state `(|H⟩ + |V⟩)/√2`.
    pub fn diagonal() -> Self {
        ket(Angle::from_degrees(45.0).expect("finite"))
    }

    pub fn amp_h(&self) -> f64 {
        self.amp_h
    }

    pub fn amp_v(&self) -> f64 {
        self.amp_v
    }

    pub fn norm_sq(&self) -> f64 {
        self.amp_h * self.amp_h + self.amp_v * self.amp_v
    }
}

impl Neg for PolarizationKet {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            amp_h: -self.amp_h,
            amp_v: -self.amp_v,
        }
    }
}

/// State transmitted by a polarizer at `axis`: `(cos axis, sin axis)`.
pub fn ket(axis: Angle) -> PolarizationKet {
    let (amp_h, amp_v) = axis.cos_sin();
    PolarizationKet { amp_h, amp_v }
}

pub fn inner_product(a: PolarizationKet, b: PolarizationKet) -> f64 {
    a.amp_h * b.amp_h + a.amp_v * b.amp_v
}

/// Born-rule probability that `state` passes `polarizer`.
pub fn pass_probability(state: PolarizationKet, polarizer: Polarizer) -> f64 {
    let overlap = inner_product(ket(polarizer.axis), state);
    flush(overlap * overlap)
}

/// Post-measurement state of a photon that passed `polarizer`.
///
/// Always returns `ket(axis)` regardless of the sign of the overlap.
pub fn project(
    state: PolarizationKet,
    polarizer: Polarizer,
) -> Result<PolarizationKet, ModelError> {
    let p = pass_probability(state, polarizer);
    if p < ZERO_PROBABILITY {
        return Err(ModelError::ZeroProbabilityProjection { probability: p });
    }
    Ok(ket(polarizer.axis))
}
