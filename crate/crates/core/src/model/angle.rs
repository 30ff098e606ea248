use std::f64::consts::PI;
use std::fmt;

use super::ModelError;

/// Orientation of a polarizer axis or a polarization plane.
///
/// An axis at `θ` and one at `θ + π` are the same physical object, so the
/// stored value is always reduced to `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle {
    radians: f64,
}

impl Angle {
    pub const ZERO: Angle = Angle { radians: 0.0 };

    pub fn from_radians(radians: f64) -> Result<Self, ModelError> {
        if !radians.is_finite() {
            return Err(ModelError::NonFiniteAngle(radians));
        }
        Ok(Self {
            radians: canonical(radians.rem_euclid(PI), PI),
        })
    }

    /// Reduces modulo 180° before converting, so whole-degree inputs keep
    /// their exact degree value through the reduction.
    pub fn from_degrees(degrees: f64) -> Result<Self, ModelError> {
        if !degrees.is_finite() {
            return Err(ModelError::NonFiniteAngle(degrees));
        }
        let reduced = canonical(degrees.rem_euclid(180.0), 180.0);
        Ok(Self {
            radians: canonical(reduced.to_radians(), PI),
        })
    }

    pub fn radians(self) -> f64 {
        self.radians
    }

    pub fn degrees(self) -> f64 {
        self.radians.to_degrees()
    }

    pub fn cos_sin(self) -> (f64, f64) {
        let (s, c) = self.radians.sin_cos();
        (c, s)
    }
}

impl Default for Angle {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self.degrees())
    }
}

// rem_euclid can return exactly `period` when the input is a tiny negative.
fn canonical(v: f64, period: f64) -> f64 {
    if v >= period || v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Degree conversion entry point used at the CLI boundary.
pub fn angle_from_degrees(degrees: f64) -> Result<Angle, ModelError> {
    Angle::from_degrees(degrees)
}
