//! Domain types and single-filter physics shared by every engine.
//!
//! Classical light is a [`ClassicalBeam`] propagated with Malus's law. A
//! single photon is a real [`PolarizationKet`] or, when it is unpolarized, a
//! [`DensityMatrix2`]. Everything here is an immutable value with pure
//! functions over it.

mod angle;
mod density;
mod ket;
mod optics;

use thiserror::Error;

pub use angle::{angle_from_degrees, Angle};
pub use density::{density_pass_probability, density_project, DensityMatrix2};
pub use ket::{inner_product, ket, pass_probability, project, PolarizationKet};
pub use optics::{
    classical_transmit, malus_factor, BeamKind, ClassicalBeam, FilterStack, Polarizer,
};

/// Tolerance for exact-math invariants (normalization, trace, symmetry).
pub const TOLERANCE: f64 = 1e-12;

/// Probabilities below this are treated as exactly zero.
pub const ZERO_PROBABILITY: f64 = 1e-15;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("intensity must be finite and nonnegative, got {0}")]
    InvalidIntensity(f64),
    #[error("polarization ket is not normalized (squared norm {0})")]
    NotNormalized(f64),
    #[error("invalid density matrix: {0}")]
    InvalidDensity(&'static str),
    #[error("cannot project onto an orthogonal axis (pass probability {probability})")]
    ZeroProbabilityProjection { probability: f64 },
}
