//! Photon-by-photon sampling of the cascade.
//!
//! Every photon draws from its own ChaCha8 stream: the key comes from the
//! configured seed and the stream id is the photon index. A photon's fate
//! therefore depends only on `(seed, index)`, and the survivor counts are
//! plain integer sums. Any split of the photons across workers gives the
//! same report bit for bit.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::model::{ket, pass_probability, project, Angle, FilterStack, PolarizationKet};

use super::quantum::QuantumInput;
use super::stats::{standard_error, wilson_interval, Z_95};
use super::EngineError;

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloConfig {
    photon_count: u64,
    seed: u64,
    input: QuantumInput,
    stack: FilterStack,
}

impl MonteCarloConfig {
    pub fn new(
        photon_count: u64,
        seed: u64,
        input: QuantumInput,
        stack: FilterStack,
    ) -> Result<Self, EngineError> {
        if photon_count == 0 {
            return Err(EngineError::NoPhotons);
        }
        Ok(Self {
            photon_count,
            seed,
            input,
            stack,
        })
    }

    pub fn photon_count(&self) -> u64 {
        self.photon_count
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn input(&self) -> QuantumInput {
        self.input
    }

    pub fn stack(&self) -> &FilterStack {
        &self.stack
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub photon_count: u64,
    /// Photons still alive after each filter.
    pub per_stage_survivor_counts: Vec<u64>,
    pub transmitted_count: u64,
    pub estimate: f64,
    pub standard_error: f64,
    pub confidence_interval_95: (f64, f64),
    pub seed: u64,
}

/// Runs on rayon's global pool.
pub fn run_monte_carlo(config: &MonteCarloConfig) -> MonteCarloReport {
    tally(config)
}

/// Runs on a dedicated pool of `workers` threads. The report does not depend
/// on `workers`.
pub fn run_monte_carlo_with_workers(
    config: &MonteCarloConfig,
    workers: usize,
) -> Result<MonteCarloReport, EngineError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| EngineError::WorkerPool(e.to_string()))?;
    Ok(pool.install(|| tally(config)))
}

fn tally(config: &MonteCarloConfig) -> MonteCarloReport {
    let stages = config.stack.len();
    let base = ChaCha8Rng::seed_from_u64(config.seed);

    // Each photon contributes survived stages; counts[k] = photons past stage k+1.
    let counts = (0..config.photon_count)
        .into_par_iter()
        .fold(
            || vec![0u64; stages],
            |mut acc, index| {
                let mut rng = base.clone();
                rng.set_stream(index);
                let survived = simulate_photon(&mut rng, config.input, &config.stack);
                for slot in &mut acc[..survived] {
                    *slot += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; stages],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let n = config.photon_count;
    let transmitted = counts.last().copied().unwrap_or(n);
    MonteCarloReport {
        photon_count: n,
        per_stage_survivor_counts: counts,
        transmitted_count: transmitted,
        estimate: transmitted as f64 / n as f64,
        standard_error: standard_error(transmitted, n),
        confidence_interval_95: wilson_interval(transmitted, n, Z_95),
        seed: config.seed,
    }
}

/// Number of filters the photon got through before being absorbed.
fn simulate_photon(rng: &mut ChaCha8Rng, input: QuantumInput, stack: &FilterStack) -> usize {
    let mut state: PolarizationKet = match input {
        QuantumInput::PureKet(plane) => ket(plane),
        QuantumInput::Unpolarized => {
            let theta = rng.random::<f64>() * PI;
            ket(Angle::from_radians(theta).expect("finite"))
        }
    };
    for (k, &p) in stack.iter().enumerate() {
        let u: f64 = rng.random();
        if u >= pass_probability(state, p) {
            return k;
        }
        state = project(state, p).expect("passed a filter with nonzero probability");
    }
    stack.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(n: u64, seed: u64, input: QuantumInput, degrees: &[f64]) -> MonteCarloConfig {
        MonteCarloConfig::new(n, seed, input, FilterStack::from_degrees(degrees).unwrap()).unwrap()
    }

    #[test]
    fn zero_photons_rejected() {
        let r = MonteCarloConfig::new(0, 1, QuantumInput::Unpolarized, FilterStack::default());
        assert!(matches!(r, Err(EngineError::NoPhotons)));
    }

    #[test]
    fn crossed_pair_transmits_nothing() {
        for seed in [0, 1, 42, u64::MAX] {
            let r = run_monte_carlo(&config(
                100_000,
                seed,
                QuantumInput::PureKet(Angle::ZERO),
                &[90.0],
            ));
            assert_eq!(r.transmitted_count, 0);
            assert_eq!(r.estimate, 0.0);
            assert_eq!(r.standard_error, 0.0);
            assert_eq!(r.confidence_interval_95.0, 0.0);
            assert!(r.confidence_interval_95.1 > 0.0);
        }
    }

    #[test]
    fn empty_stack_transmits_everything() {
        let r = run_monte_carlo(&config(1000, 3, QuantumInput::Unpolarized, &[]));
        assert_eq!(r.transmitted_count, 1000);
        assert!(r.per_stage_survivor_counts.is_empty());
        assert_eq!(r.estimate, 1.0);
    }

    #[test]
    fn quarter_within_four_sigma() {
        let r = run_monte_carlo(&config(
            1_000_000,
            7,
            QuantumInput::PureKet(Angle::ZERO),
            &[45.0, 90.0],
        ));
        assert!(
            (r.estimate - 0.25).abs() <= 0.00174,
            "estimate {}",
            r.estimate
        );
    }

    #[test]
    fn unpolarized_eighth_within_four_sigma() {
        let r = run_monte_carlo(&config(
            1_000_000,
            7,
            QuantumInput::Unpolarized,
            &[0.0, 45.0, 90.0],
        ));
        assert!(
            (r.estimate - 0.125).abs() <= 0.00133,
            "estimate {}",
            r.estimate
        );
    }

    #[test]
    fn survivors_non_increasing() {
        let r = run_monte_carlo(&config(
            20_000,
            11,
            QuantumInput::Unpolarized,
            &[10.0, 50.0, 20.0, 170.0, 90.0],
        ));
        assert!(r.per_stage_survivor_counts.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(
            r.transmitted_count,
            *r.per_stage_survivor_counts.last().unwrap()
        );
        let (lo, hi) = r.confidence_interval_95;
        assert!(0.0 <= lo && lo <= r.estimate && r.estimate <= hi && hi <= 1.0);
    }

    #[test]
    fn identical_across_worker_counts() {
        let c = config(50_000, 42, QuantumInput::Unpolarized, &[0.0, 45.0, 90.0]);
        let one = run_monte_carlo_with_workers(&c, 1).unwrap();
        let four = run_monte_carlo_with_workers(&c, 4).unwrap();
        let seven = run_monte_carlo_with_workers(&c, 7).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, seven);
        assert_eq!(one, run_monte_carlo(&c));
    }

    #[test]
    fn seed_changes_outcome() {
        let a = run_monte_carlo(&config(10_000, 1, QuantumInput::Unpolarized, &[0.0, 45.0]));
        let b = run_monte_carlo(&config(10_000, 2, QuantumInput::Unpolarized, &[0.0, 45.0]));
        assert_ne!(a.per_stage_survivor_counts, b.per_stage_survivor_counts);
    }

    #[test]
    fn photon_fate_depends_only_on_index() {
        let stack = FilterStack::from_degrees(&[0.0, 45.0, 90.0]).unwrap();
        let base = ChaCha8Rng::seed_from_u64(99);
        let fate = |i: u64| {
            let mut rng = base.clone();
            rng.set_stream(i);
            simulate_photon(&mut rng, QuantumInput::Unpolarized, &stack)
        };
        let forward: Vec<_> = (0..200).map(fate).collect();
        let backward: Vec<_> = (0..200).rev().map(fate).collect();
        assert!(forward.iter().eq(backward.iter().rev()));
    }
}
