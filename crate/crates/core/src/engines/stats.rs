/// Two-sided 95% standard normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Wilson score interval for `successes` out of `trials`, clamped to [0, 1].
///
/// Unlike the normal approximation it stays non-degenerate at 0 and at
/// `trials` successes.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "wilson interval needs at least one trial");
    assert!(successes <= trials);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = (center - half).clamp(0.0, 1.0).min(p);
    let hi = (center + half).clamp(0.0, 1.0).max(p);
    (lo, hi)
}

/// Binomial standard error `sqrt(p̂(1 − p̂)/n)`.
pub fn standard_error(successes: u64, trials: u64) -> f64 {
    let n = trials as f64;
    let p = successes as f64 / n;
    (p * (1.0 - p) / n).sqrt()
}
