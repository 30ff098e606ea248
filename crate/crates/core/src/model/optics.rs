use super::{Angle, ModelError, ZERO_PROBABILITY};

/// Ideal linear polarizer: full transmission along `axis`, total extinction
/// perpendicular to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polarizer {
    pub axis: Angle,
}

impl Polarizer {
    pub fn new(axis: Angle) -> Self {
        Self { axis }
    }

    pub fn from_degrees(degrees: f64) -> Result<Self, ModelError> {
        Angle::from_degrees(degrees).map(Self::new)
    }
}

/// Ordered sequence of polarizers; light meets them front to back.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FilterStack {
    polarizers: Vec<Polarizer>,
}

impl FilterStack {
    pub fn new(polarizers: Vec<Polarizer>) -> Self {
        Self { polarizers }
    }

    pub fn from_degrees(degrees: &[f64]) -> Result<Self, ModelError> {
        degrees
            .iter()
            .map(|&d| Polarizer::from_degrees(d))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn polarizers(&self) -> &[Polarizer] {
        &self.polarizers
    }

    pub fn len(&self) -> usize {
        self.polarizers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polarizers.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polarizer> {
        self.polarizers.iter()
    }

    pub fn axes(&self) -> impl Iterator<Item = Angle> + '_ {
        self.polarizers.iter().map(|p| p.axis)
    }
}

impl FromIterator<Polarizer> for FilterStack {
    fn from_iter<I: IntoIterator<Item = Polarizer>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FilterStack {
    type Item = &'a Polarizer;
    type IntoIter = std::slice::Iter<'a, Polarizer>;

    fn into_iter(self) -> Self::IntoIter {
        self.polarizers.iter()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BeamKind {
    Unpolarized,
    Linear(Angle),
}

/// Classical light: polarization state plus a nonnegative intensity in
/// arbitrary units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalBeam {
    kind: BeamKind,
    intensity: f64,
}

impl ClassicalBeam {
    pub fn new(kind: BeamKind, intensity: f64) -> Result<Self, ModelError> {
        if !(intensity.is_finite() && intensity >= 0.0) {
            return Err(ModelError::InvalidIntensity(intensity));
        }
        Ok(Self { kind, intensity })
    }

    pub fn unpolarized(intensity: f64) -> Result<Self, ModelError> {
        Self::new(BeamKind::Unpolarized, intensity)
    }

    pub fn linear(plane: Angle, intensity: f64) -> Result<Self, ModelError> {
        Self::new(BeamKind::Linear(plane), intensity)
    }

    pub fn kind(&self) -> BeamKind {
        self.kind
    }

    pub fn intensity(&self) -> f64 {
        self.intensity
    }

    pub fn plane(&self) -> Option<Angle> {
        match self.kind {
            BeamKind::Unpolarized => None,
            BeamKind::Linear(a) => Some(a),
        }
    }
}

/// Malus's law: fraction of linearly polarized intensity an ideal polarizer
/// passes, `cos²(axis − plane)`.
///
/// Values below [`ZERO_PROBABILITY`] are flushed to exactly zero so crossed
/// polarizers extinguish completely instead of leaking `cos²(π/2) ≈ 4e-33`.
pub fn malus_factor(plane: Angle, axis: Angle) -> f64 {
    let c = (axis.radians() - plane.radians()).cos();
    flush(c * c)
}

pub fn classical_transmit(beam: ClassicalBeam, polarizer: Polarizer) -> ClassicalBeam {
    let intensity = match beam.kind {
        BeamKind::Unpolarized => beam.intensity / 2.0,
        BeamKind::Linear(plane) => beam.intensity * malus_factor(plane, polarizer.axis),
    };
    ClassicalBeam {
        kind: BeamKind::Linear(polarizer.axis),
        intensity,
    }
}

pub(crate) fn flush(p: f64) -> f64 {
    if p < ZERO_PROBABILITY {
        0.0
    } else {
        p.min(1.0)
    }
}
