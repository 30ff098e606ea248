//! Command-line front end: flag parsing, engine dispatch, report rendering.

mod render;
mod spec;

use thiserror::Error;

use crate::engines::{
    compare, run_classical, run_monte_carlo, run_monte_carlo_with_workers, run_quantum_exact,
    EngineError, MonteCarloConfig, QuantumInput,
};
use crate::model::{Angle, ClassicalBeam, FilterStack, ModelError};

pub use render::{format_number, render, Report, TSV_HEADER};
pub use spec::{
    parse_filter_list, parse_spec, parse_stack_file, ExperimentSpec, Format, InputSpec, Mode,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COMPARE_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// `--help` / `--version` text; not a failure.
    #[error("{0}")]
    Help(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Runs the engine(s) `spec` asks for.
pub fn run(spec: &ExperimentSpec) -> Result<Report, CliError> {
    let stack = FilterStack::from_degrees(&spec.filters)?;
    let quantum_input = match spec.input {
        InputSpec::Unpolarized => QuantumInput::Unpolarized,
        InputSpec::Linear(deg) => QuantumInput::PureKet(Angle::from_degrees(deg)?),
    };
    let beam = || -> Result<ClassicalBeam, CliError> {
        Ok(match spec.input {
            InputSpec::Unpolarized => ClassicalBeam::unpolarized(spec.intensity)?,
            InputSpec::Linear(deg) => {
                ClassicalBeam::linear(Angle::from_degrees(deg)?, spec.intensity)?
            }
        })
    };

    Ok(match spec.mode {
        Mode::Classical => Report::Classical(run_classical(beam()?, &stack)),
        Mode::Quantum => Report::Quantum(run_quantum_exact(quantum_input, &stack)),
        Mode::Compare => {
            let classical = run_classical(beam()?, &stack);
            let quantum = run_quantum_exact(quantum_input, &stack);
            let comparison = compare(&classical, &quantum, spec.tolerance)?;
            Report::Compare {
                classical,
                quantum,
                comparison,
            }
        }
        Mode::Mc => {
            let config =
                MonteCarloConfig::new(spec.photons, spec.seed, quantum_input, stack.clone())?;
            let report = match spec.workers {
                Some(w) => run_monte_carlo_with_workers(&config, w)?,
                None => run_monte_carlo(&config),
            };
            Report::MonteCarlo { stack, report }
        }
    })
}

/// 0 on success, 1 when a comparison fails (or an engine cannot run),
/// 2 on usage errors.
pub fn exit_policy(result: &Result<Report, CliError>) -> u8 {
    match result {
        Ok(Report::Compare { comparison, .. }) if !comparison.passed => EXIT_COMPARE_FAILED,
        Ok(_) | Err(CliError::Help(_)) => EXIT_OK,
        Err(CliError::Usage(_)) => EXIT_USAGE,
        Err(CliError::Engine(_)) => EXIT_COMPARE_FAILED,
    }
}

/// Parses, runs and renders. Returns (stdout text, stderr text, exit code).
pub fn main_with_args<I, T>(args: I) -> (String, String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let parsed = parse_spec(args);
    let format = parsed.as_ref().map(|s| s.format).unwrap_or(Format::Tsv);
    let result = parsed.and_then(|spec| run(&spec));
    let code = exit_policy(&result);
    match result {
        Ok(report) => (render(&report, format), String::new(), code),
        Err(CliError::Help(text)) => (text, String::new(), code),
        Err(e) => (String::new(), format!("polar-cascade: {e}\n"), code),
    }
}
