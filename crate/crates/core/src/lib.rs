//! Light transmission through stacks of ideal linear polarizers.
//!
//! Three engines evaluate the same stack: a classical Malus-law intensity
//! cascade, an exact quantum projective-measurement cascade, and a seeded
//! Monte Carlo photon simulation. [`engines::compare`] reconciles the first
//! two; the Monte Carlo estimate converges to both.
//!
//! ```
//! use polar_cascade::engines::{run_classical, run_quantum_exact, QuantumInput};
//! use polar_cascade::model::{ClassicalBeam, FilterStack};
//!
//! let stack = FilterStack::from_degrees(&[0.0, 45.0, 90.0]).unwrap();
//! let classical = run_classical(ClassicalBeam::unpolarized(1.0).unwrap(), &stack);
//! let quantum = run_quantum_exact(QuantumInput::Unpolarized, &stack);
//! assert!((classical.final_transmitted_fraction - 0.125).abs() < 1e-12);
//! assert!((quantum.final_transmitted_fraction - 0.125).abs() < 1e-12);
//! ```

pub mod cli;
pub mod engines;
pub mod model;
