use std::fmt::Write;

use crate::engines::{CascadeTrace, ComparisonReport, MonteCarloReport, TraceInput};
use crate::model::FilterStack;

use super::spec::Format;

pub const TSV_HEADER: &str = "stage\taxis_deg\tclassical_intensity\tstage_prob\tcumulative_prob";

/// Result of one CLI run, ready to render.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Classical(CascadeTrace),
    Quantum(CascadeTrace),
    Compare {
        classical: CascadeTrace,
        quantum: CascadeTrace,
        comparison: ComparisonReport,
    },
    MonteCarlo {
        stack: FilterStack,
        report: MonteCarloReport,
    },
}

/// Rounds to 12 significant digits, then prints the shortest string that
/// reads back as that value. Exponent form outside `[1e-6, 1e15)`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float literal");
    let mag = rounded.abs();
    if (1e-6..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

struct Row {
    stage: usize,
    axis_deg: f64,
    intensity: Option<f64>,
    stage_prob: Option<f64>,
    cumulative: Option<f64>,
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_owned(), format_number)
}

fn trace_rows(trace: &CascadeTrace) -> Vec<Row> {
    trace
        .stages
        .iter()
        .map(|s| Row {
            stage: s.stage_index,
            axis_deg: s.axis.degrees(),
            intensity: s.classical_intensity_after,
            stage_prob: s.stage_pass_probability,
            cumulative: s.cumulative_probability,
        })
        .collect()
}

fn merged_rows(classical: &CascadeTrace, quantum: &CascadeTrace) -> Vec<Row> {
    classical
        .stages
        .iter()
        .zip(&quantum.stages)
        .map(|(c, q)| Row {
            stage: c.stage_index,
            axis_deg: c.axis.degrees(),
            intensity: c.classical_intensity_after,
            stage_prob: q.stage_pass_probability,
            cumulative: q.cumulative_probability,
        })
        .collect()
}

/// Survivor-count ratios: stage probability is conditional on reaching the
/// stage, cumulative is over all photons.
fn monte_carlo_rows(stack: &FilterStack, report: &MonteCarloReport) -> Vec<Row> {
    let n = report.photon_count as f64;
    let mut before = report.photon_count;
    stack
        .iter()
        .zip(&report.per_stage_survivor_counts)
        .enumerate()
        .map(|(i, (p, &after))| {
            let stage_prob = if before == 0 {
                0.0
            } else {
                after as f64 / before as f64
            };
            before = after;
            Row {
                stage: i + 1,
                axis_deg: p.axis.degrees(),
                intensity: None,
                stage_prob: Some(stage_prob),
                cumulative: Some(after as f64 / n),
            }
        })
        .collect()
}

fn rows_of(report: &Report) -> Vec<Row> {
    match report {
        Report::Classical(t) | Report::Quantum(t) => trace_rows(t),
        Report::Compare {
            classical, quantum, ..
        } => merged_rows(classical, quantum),
        Report::MonteCarlo { stack, report } => monte_carlo_rows(stack, report),
    }
}

fn final_fraction(report: &Report) -> f64 {
    match report {
        Report::Classical(t) | Report::Quantum(t) => t.final_transmitted_fraction,
        Report::Compare { classical, .. } => classical.final_transmitted_fraction,
        Report::MonteCarlo { report, .. } => report.estimate,
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Tsv => render_tsv(report),
        Format::Text => render_text(report),
    }
}

fn render_tsv(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(TSV_HEADER);
    out.push('\n');
    for r in rows_of(report) {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            r.stage,
            format_number(r.axis_deg),
            cell(r.intensity),
            cell(r.stage_prob),
            cell(r.cumulative)
        );
    }
    let _ = writeln!(
        out,
        "# final_fraction={}",
        format_number(final_fraction(report))
    );
    match report {
        Report::MonteCarlo { report, .. } => {
            let (lo, hi) = report.confidence_interval_95;
            let _ = writeln!(
                out,
                "# estimate={} stderr={} ci95={},{} seed={}",
                format_number(report.estimate),
                format_number(report.standard_error),
                format_number(lo),
                format_number(hi),
                report.seed
            );
        }
        Report::Compare { comparison, .. } => {
            let _ = writeln!(
                out,
                "# max_diff={} tolerance={} result={}",
                format_number(comparison.max_difference),
                format_number(comparison.tolerance),
                if comparison.passed { "pass" } else { "fail" }
            );
        }
        _ => {}
    }
    out
}

fn describe_input(input: &TraceInput) -> String {
    match input {
        TraceInput::Unpolarized { intensity } => {
            format!("unpolarized, intensity {}", format_number(*intensity))
        }
        TraceInput::Linear { plane, intensity } => format!(
            "linear at {} deg, intensity {}",
            format_number(plane.degrees()),
            format_number(*intensity)
        ),
        TraceInput::PureKet { plane } => {
            format!("photon polarized at {} deg", format_number(plane.degrees()))
        }
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let (title, input) = match report {
        Report::Classical(t) => ("classical (Malus's law)", Some(&t.input)),
        Report::Quantum(t) => ("quantum (exact)", Some(&t.input)),
        Report::Compare { classical, .. } => ("classical vs quantum", Some(&classical.input)),
        Report::MonteCarlo { .. } => ("quantum (Monte Carlo)", None),
    };
    let _ = writeln!(out, "engine: {title}");
    if let Some(input) = input {
        let _ = writeln!(out, "input:  {}", describe_input(input));
    }
    if let Report::MonteCarlo { report, .. } = report {
        let _ = writeln!(
            out,
            "photons: {}  seed: {}",
            report.photon_count, report.seed
        );
    }

    let rows = rows_of(report);
    if rows.is_empty() {
        out.push_str("no filters\n");
    } else {
        let _ = writeln!(
            out,
            "{:>5}  {:>14}  {:>14}  {:>14}  {:>14}",
            "stage", "axis (deg)", "intensity", "stage prob", "cumulative"
        );
        for r in rows {
            let _ = writeln!(
                out,
                "{:>5}  {:>14}  {:>14}  {:>14}  {:>14}",
                r.stage,
                format_number(r.axis_deg),
                cell(r.intensity),
                cell(r.stage_prob),
                cell(r.cumulative)
            );
        }
    }
    let _ = writeln!(
        out,
        "transmitted fraction: {}",
        format_number(final_fraction(report))
    );
    match report {
        Report::MonteCarlo { report, .. } => {
            let (lo, hi) = report.confidence_interval_95;
            let _ = writeln!(
                out,
                "transmitted photons: {}  std. error: {}  95% CI: [{}, {}]",
                report.transmitted_count,
                format_number(report.standard_error),
                format_number(lo),
                format_number(hi)
            );
        }
        Report::Compare { comparison, .. } => {
            let _ = writeln!(
                out,
                "max |classical - quantum| = {} (tolerance {}): {}",
                format_number(comparison.max_difference),
                format_number(comparison.tolerance),
                if comparison.passed { "PASS" } else { "FAIL" }
            );
        }
        _ => {}
    }
    out
}
