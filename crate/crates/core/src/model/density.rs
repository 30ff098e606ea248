use super::ket::{ket, PolarizationKet};
use super::optics::flush;
use super::{ModelError, Polarizer, TOLERANCE, ZERO_PROBABILITY};

/// Real 2×2 density matrix over the `{H, V}` basis.
///
/// Always symmetric, unit trace and positive semidefinite. `I/2` is the
/// fully unpolarized state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    m: [[f64; 2]; 2],
}

impl DensityMatrix2 {
    pub fn new(m: [[f64; 2]; 2]) -> Result<Self, ModelError> {
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(ModelError::InvalidDensity("non-finite entry"));
        }
        if (m[0][1] - m[1][0]).abs() > TOLERANCE {
            return Err(ModelError::InvalidDensity("not symmetric"));
        }
        if (m[0][0] + m[1][1] - 1.0).abs() > TOLERANCE {
            return Err(ModelError::InvalidDensity("trace is not 1"));
        }
        let rho = Self { m };
        let (lo, _) = rho.eigenvalues();
        if lo < -TOLERANCE {
            return Err(ModelError::InvalidDensity("negative eigenvalue"));
        }
        Ok(rho)
    }

    pub fn unpolarized() -> Self {
        Self {
            m: [[0.5, 0.0], [0.0, 0.5]],
        }
    }

    /// `|s⟩⟨s|`
    pub fn pure(s: PolarizationKet) -> Self {
        let (h, v) = (s.amp_h(), s.amp_v());
        Self {
            m: [[h * h, h * v], [v * h, v * v]],
        }
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let [[a, b], [_, d]] = self.m;
        let mean = (a + d) / 2.0;
        let radius = (((a - d) / 2.0).powi(2) + b * b).sqrt();
        (mean - radius, mean + radius)
    }

    /// `⟨s|ρ|s⟩`
    pub fn expectation(&self, s: PolarizationKet) -> f64 {
        let (h, v) = (s.amp_h(), s.amp_v());
        let [[a, b], [c, d]] = self.m;
        h * (a * h + b * v) + v * (c * h + d * v)
    }
}

pub fn density_pass_probability(rho: &DensityMatrix2, polarizer: Polarizer) -> f64 {
    flush(rho.expectation(ket(polarizer.axis)))
}

pub fn density_project(
    rho: &DensityMatrix2,
    polarizer: Polarizer,
) -> Result<DensityMatrix2, ModelError> {
    let p = density_pass_probability(rho, polarizer);
    if p < ZERO_PROBABILITY {
        return Err(ModelError::ZeroProbabilityProjection { probability: p });
    }
    Ok(DensityMatrix2::pure(ket(polarizer.axis)))
}
