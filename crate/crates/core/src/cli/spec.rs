use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputSpec {
    Unpolarized,
    /// Linearly polarized along the given plane, in degrees.
    Linear(f64),
}

impl fmt::Display for InputSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputSpec::Unpolarized => f.write_str("unpolarized"),
            InputSpec::Linear(deg) => write!(f, "linear:{deg}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Classical,
    Quantum,
    Mc,
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Text,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .fmt(f)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .fmt(f)
    }
}

/// A fully validated experiment, angles still in degrees as the user gave
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub input: InputSpec,
    pub intensity: f64,
    pub filters: Vec<f64>,
    pub mode: Mode,
    pub photons: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub format: Format,
    /// Monte Carlo thread count; `None` uses every core. Never changes output.
    pub workers: Option<usize>,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        Self {
            input: InputSpec::Unpolarized,
            intensity: 1.0,
            filters: Vec::new(),
            mode: Mode::Classical,
            photons: 1_000_000,
            seed: 42,
            tolerance: 1e-9,
            format: Format::Tsv,
            workers: None,
        }
    }
}

impl ExperimentSpec {
    /// Canonical flag list that [`parse_spec`] maps back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let filters = self
            .filters
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mut args = vec![
            "--input".to_owned(),
            self.input.to_string(),
            "--intensity".to_owned(),
            self.intensity.to_string(),
            "--filters".to_owned(),
            filters,
            "--mode".to_owned(),
            self.mode.to_string(),
            "--photons".to_owned(),
            self.photons.to_string(),
            "--seed".to_owned(),
            self.seed.to_string(),
            "--tolerance".to_owned(),
            self.tolerance.to_string(),
            "--format".to_owned(),
            self.format.to_string(),
        ];
        if let Some(w) = self.workers {
            args.push("--workers".to_owned());
            args.push(w.to_string());
        }
        args
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "polar-cascade",
    version,
    about = "Light transmission through stacks of ideal linear polarizers"
)]
struct Flags {
    /// Comma-separated polarizer axes in degrees, front to back
    #[arg(long, allow_hyphen_values = true, value_name = "A,B,C")]
    filters: Option<String>,

    /// File with one axis in degrees per line; `#` starts a comment
    #[arg(long, value_name = "PATH")]
    stack_file: Option<PathBuf>,

    /// `unpolarized` or `linear:<deg>`
    #[arg(long, allow_hyphen_values = true)]
    input: Option<String>,

    /// Input intensity, arbitrary units
    #[arg(long, allow_hyphen_values = true)]
    intensity: Option<String>,

    #[arg(long, value_enum)]
    mode: Option<Mode>,

    /// Photons to simulate in mc mode
    #[arg(long, allow_hyphen_values = true)]
    photons: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    seed: Option<String>,

    /// Largest allowed classical/quantum difference in compare mode
    #[arg(long, allow_hyphen_values = true)]
    tolerance: Option<String>,

    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Monte Carlo worker threads (default: all cores)
    #[arg(long, allow_hyphen_values = true)]
    workers: Option<String>,
}

/// Parses command-line flags (without the program name) into a validated
/// spec. Reads `--stack-file` unless `--filters` is also given.
pub fn parse_spec<I, T>(args: I) -> Result<ExperimentSpec, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv =
        std::iter::once(OsString::from("polar-cascade")).chain(args.into_iter().map(Into::into));
    let flags = Flags::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Help(e.to_string())
        }
        _ => CliError::Usage(e.to_string().trim_end().to_owned()),
    })?;

    let stack_text = match (&flags.filters, &flags.stack_file) {
        (None, Some(path)) => Some(fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read stack file '{}': {e}", path.display()))
        })?),
        _ => None,
    };
    build_spec(flags, stack_text.as_deref())
}

fn build_spec(flags: Flags, stack_text: Option<&str>) -> Result<ExperimentSpec, CliError> {
    let defaults = ExperimentSpec::default();
    let filters = match (&flags.filters, stack_text) {
        (Some(list), _) => parse_filter_list(list)?,
        (None, Some(text)) => parse_stack_file(text)?,
        (None, None) => {
            return Err(CliError::Usage(
                "no filters given: pass --filters or --stack-file".to_owned(),
            ))
        }
    };

    let input = match flags.input.as_deref() {
        None => defaults.input,
        Some(s) => parse_input(s)?,
    };
    let intensity = match flags.intensity.as_deref() {
        None => defaults.intensity,
        Some(s) => {
            let v = parse_finite(s, "--intensity")?;
            if v <= 0.0 {
                return Err(CliError::Usage(format!(
                    "--intensity must be positive, got '{s}'"
                )));
            }
            v
        }
    };
    let mode = flags.mode.unwrap_or(defaults.mode);
    let photons = match flags.photons.as_deref() {
        None => defaults.photons,
        Some(s) => parse_integer::<u64>(s, "--photons")?,
    };
    if mode == Mode::Mc && photons < 1 {
        return Err(CliError::Usage(format!(
            "--photons must be at least 1, got '{photons}'"
        )));
    }
    let seed = match flags.seed.as_deref() {
        None => defaults.seed,
        Some(s) => parse_integer::<u64>(s, "--seed")?,
    };
    let tolerance = match flags.tolerance.as_deref() {
        None => defaults.tolerance,
        Some(s) => {
            let v = parse_finite(s, "--tolerance")?;
            if v < 0.0 {
                return Err(CliError::Usage(format!(
                    "--tolerance must be nonnegative, got '{s}'"
                )));
            }
            v
        }
    };
    let workers = match flags.workers.as_deref() {
        None => None,
        Some(s) => match parse_integer::<usize>(s, "--workers")? {
            0 => {
                return Err(CliError::Usage(
                    "--workers must be at least 1, got '0'".to_owned(),
                ))
            }
            w => Some(w),
        },
    };

    Ok(ExperimentSpec {
        input,
        intensity,
        filters,
        mode,
        photons,
        seed,
        tolerance,
        format: flags.format.unwrap_or(defaults.format),
        workers,
    })
}

/// `"0,45,90"` to degrees. An empty or all-blank list is an empty stack.
pub fn parse_filter_list(list: &str) -> Result<Vec<f64>, CliError> {
    if list.trim().is_empty() {
        return Ok(Vec::new());
    }
    list.split(',').map(|tok| parse_angle(tok.trim())).collect()
}

/// One angle in degrees per line; `#` starts a comment, blank lines are
/// skipped.
pub fn parse_stack_file(text: &str) -> Result<Vec<f64>, CliError> {
    text.lines()
        .map(|line| line.split_once('#').map_or(line, |(head, _)| head).trim())
        .filter(|line| !line.is_empty())
        .map(parse_angle)
        .collect()
}

fn parse_input(s: &str) -> Result<InputSpec, CliError> {
    if s == "unpolarized" {
        return Ok(InputSpec::Unpolarized);
    }
    match s.strip_prefix("linear:") {
        Some(angle) => parse_angle(angle.trim()).map(InputSpec::Linear),
        None => Err(CliError::Usage(format!(
            "--input must be 'unpolarized' or 'linear:<deg>', got '{s}'"
        ))),
    }
}

fn parse_angle(tok: &str) -> Result<f64, CliError> {
    match tok.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(CliError::Usage(format!("malformed angle '{tok}'"))),
    }
}

fn parse_finite(s: &str, flag: &str) -> Result<f64, CliError> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(CliError::Usage(format!(
            "{flag} expects a finite number, got '{s}'"
        ))),
    }
}

fn parse_integer<T: std::str::FromStr>(s: &str, flag: &str) -> Result<T, CliError> {
    s.trim()
        .parse::<T>()
        .map_err(|_| CliError::Usage(format!("{flag} expects a nonnegative integer, got '{s}'")))
}
