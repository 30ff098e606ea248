//! Exit criteria. Run with `cargo test --test acceptance -- --nocapture` to
//! see one PASS/FAIL line per criterion.

use std::process::Command;
use std::time::{Duration, Instant};

use polar_cascade::cli::{main_with_args, parse_spec, run, Report};
use polar_cascade::engines::{
    compare, run_classical, run_quantum_exact, staircase_transmission, QuantumInput,
};
use polar_cascade::model::{Angle, ClassicalBeam, FilterStack};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_polar-cascade");

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn cli_report(args: &str) -> Report {
    let spec = parse_spec(args.split_whitespace()).expect("valid flags");
    run(&spec).expect("run succeeds")
}

fn classical_intensities(report: &Report) -> Vec<f64> {
    match report {
        Report::Classical(t) => t
            .stages
            .iter()
            .map(|s| s.classical_intensity_after.unwrap())
            .collect(),
        other => panic!("expected a classical report, got {other:?}"),
    }
}

fn perpendicular_pair() -> Outcome {
    let (report, elapsed) =
        timed(|| cli_report("--filters 0,90 --input unpolarized --mode classical"));
    let got = classical_intensities(&report);
    let values_ok =
        got.len() == 2 && (got[0] - 0.5).abs() <= 1e-15 && (got[1] - 0.0).abs() <= 1e-15;
    Outcome {
        id: 1,
        name: "perpendicular pair: intensities 0.5 then 0",
        passed: values_ok && elapsed < Duration::from_millis(10),
        detail: format!("stages {got:?}, {elapsed:?}"),
    }
}

fn three_filter_classical() -> Outcome {
    let (report, elapsed) =
        timed(|| cli_report("--filters 0,45,90 --input unpolarized --mode classical"));
    let fraction = match &report {
        Report::Classical(t) => t.final_transmitted_fraction,
        _ => f64::NAN,
    };
    Outcome {
        id: 2,
        name: "three filters classical: fraction 1/8",
        passed: (fraction - 0.125).abs() <= 1e-12 && elapsed < Duration::from_millis(10),
        detail: format!("fraction {fraction}, {elapsed:?}"),
    }
}

fn quantum_product_rule() -> Outcome {
    let stack = FilterStack::from_degrees(&[45.0, 90.0]).unwrap();
    let t = run_quantum_exact(QuantumInput::PureKet(Angle::ZERO), &stack);
    let probs: Vec<f64> = t
        .stages
        .iter()
        .map(|s| s.stage_pass_probability.unwrap())
        .collect();
    let cumulative = t.final_transmitted_fraction;
    let passed = probs.len() == 2
        && probs.iter().all(|p| (p - 0.5).abs() <= 1e-12)
        && (cumulative - 0.25).abs() <= 1e-12;
    Outcome {
        id: 3,
        name: "quantum product rule: [1/2, 1/2] -> 1/4",
        passed,
        detail: format!("stage probs {probs:?}, cumulative {cumulative}"),
    }
}

fn quantum_classical_equivalence() -> Outcome {
    let ((fixed_ok, fixed_diff, random_ok, worst), elapsed) = timed(|| {
        let fixed =
            cli_report("--filters 0,45,90 --input unpolarized --mode compare --tolerance 1e-12");
        let (fixed_ok, fixed_diff) = match &fixed {
            Report::Compare {
                classical,
                quantum,
                comparison,
            } => (
                comparison.passed
                    && (classical.final_transmitted_fraction - 0.125).abs() <= 1e-12
                    && (quantum.final_transmitted_fraction - 0.125).abs() <= 1e-12,
                comparison.max_difference,
            ),
            _ => (false, f64::NAN),
        };

        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut random_ok = true;
        let mut worst = 0.0f64;
        for i in 0..2000 {
            let len = rng.random_range(0..=10);
            let angles: Vec<f64> = (0..len).map(|_| rng.random::<f64>() * 180.0).collect();
            let stack = FilterStack::from_degrees(&angles).unwrap();
            let (beam, q) = if i % 2 == 0 {
                (
                    ClassicalBeam::unpolarized(1.0).unwrap(),
                    QuantumInput::Unpolarized,
                )
            } else {
                let plane = Angle::from_degrees(rng.random::<f64>() * 180.0).unwrap();
                (
                    ClassicalBeam::linear(plane, 1.0).unwrap(),
                    QuantumInput::PureKet(plane),
                )
            };
            let r = compare(
                &run_classical(beam, &stack),
                &run_quantum_exact(q, &stack),
                1e-9,
            )
            .unwrap();
            worst = worst.max(r.max_difference);
            random_ok &= r.passed;
        }
        (fixed_ok, fixed_diff, random_ok, worst)
    });
    Outcome {
        id: 4,
        name: "quantum-classical equivalence (1e-12 fixed, 1e-9 over 2000 random stacks)",
        passed: fixed_ok && random_ok && elapsed < Duration::from_secs(5),
        detail: format!("fixed diff {fixed_diff:e}, worst random diff {worst:e}, {elapsed:?}"),
    }
}

fn monte_carlo_convergence() -> Outcome {
    let ((estimate, crossed), elapsed) = timed(|| {
        let estimate = match cli_report(
            "--filters 0,45,90 --input unpolarized --mode mc --photons 1000000 --seed 42",
        ) {
            Report::MonteCarlo { report, .. } => report.estimate,
            _ => f64::NAN,
        };
        let crossed = match cli_report(
            "--filters 0,90 --input linear:0 --mode mc --photons 1000000 --seed 42",
        ) {
            Report::MonteCarlo { report, .. } => report.transmitted_count,
            _ => u64::MAX,
        };
        (estimate, crossed)
    });
    Outcome {
        id: 5,
        name: "Monte Carlo: 1/8 within 0.00133, crossed pair count 0",
        passed: (estimate - 0.125).abs() <= 0.00133
            && crossed == 0
            && elapsed < Duration::from_secs(5),
        detail: format!("estimate {estimate}, crossed count {crossed}, {elapsed:?}"),
    }
}

fn determinism_across_workers() -> Outcome {
    let base = [
        "--filters",
        "0,45,90",
        "--input",
        "unpolarized",
        "--mode",
        "mc",
        "--photons",
        "1000000",
        "--seed",
        "42",
        "--workers",
    ];
    let outputs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|w| {
            let mut args = base.to_vec();
            args.push(w);
            let out = Command::new(BIN).args(&args).output().expect("binary runs");
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    let in_process = main_with_args(base[..base.len() - 1].iter().copied()).0;
    let passed = outputs.windows(2).all(|w| w[0] == w[1]) && outputs[0] == in_process.as_bytes();
    Outcome {
        id: 6,
        name: "Monte Carlo TSV byte-identical for 1, 3, 8 workers and the default pool",
        passed,
        detail: format!("{} bytes each", outputs[0].len()),
    }
}

fn staircase() -> Outcome {
    let start = Angle::ZERO;
    let end = Angle::from_degrees(90.0).unwrap();
    let mut passed = true;
    let mut previous = f64::NEG_INFINITY;
    let mut worst = 0.0f64;
    let mut fractions = Vec::new();
    for k in 0..=10 {
        let n = 1usize << k;
        let got = staircase_transmission(n, start, end)
            .unwrap()
            .final_transmitted_fraction;
        let closed = (90f64.to_radians() / n as f64).cos().powi(2).powi(n as i32);
        worst = worst.max((got - closed).abs());
        passed &= (got - closed).abs() <= 1e-9 && got > previous;
        previous = got;
        fractions.push(got);
    }
    passed &= fractions[0] == 0.0 && (fractions[1] - 0.25).abs() <= 1e-12;
    Outcome {
        id: 7,
        name: "staircase matches (cos^2(90/n))^n, increasing, n=1 -> 0, n=2 -> 1/4",
        passed,
        detail: format!("worst diff {worst:e}, n=1024 -> {}", fractions[10]),
    }
}

#[test]
fn acceptance() {
    let outcomes = [
        perpendicular_pair(),
        three_filter_classical(),
        quantum_product_rule(),
        quantum_classical_equivalence(),
        monte_carlo_convergence(),
        determinism_across_workers(),
        staircase(),
    ];
    for o in &outcomes {
        println!(
            "[{}] criterion {}: {} ({})",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
