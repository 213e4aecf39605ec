//! Closed-form single-error correction expressions for the length-n
//! thermometer code, their p = 1/n optimum, curve generation, and a
//! Monte Carlo harness that validates the formulas against the channel
//! and decoder modules.
//!
//! The headline expression (n-1)^2 * p * (1-p)^(n-1) is an expected
//! corrected-pattern count over the whole codebook, not a probability:
//! it exceeds 1 for some (n, p). Divide by n+1 for the per-trial
//! correction probability under a uniform codeword draw, or by n(n+1)
//! for the fraction of all single-error events corrected; both
//! normalizations are provided.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channel::transmit_with;
use crate::decoder::{decode, Codebook, DecodeOutcome, TiePolicy};
use crate::error::{Error, Result};

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Range(format!(
            "bit error probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Expected number of weight-1 patterns corrected across all n+1
/// codewords: (n-1)^2 * p * (1-p)^(n-1). May exceed 1; see module docs.
pub fn single_correction_probability(n: usize, p: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Range("code length n must be positive".into()));
    }
    check_p(p)?;
    let nf = n as f64;
    Ok((nf - 1.0) * (nf - 1.0) * p * (1.0 - p).powi(n as i32 - 1))
}

/// Fraction of the n(n+1) single-error transmission events that are
/// corrected: single_correction_probability / (n(n+1)).
pub fn single_correction_capacity(n: usize, p: f64) -> Result<f64> {
    let numerator = single_correction_probability(n, p)?;
    let nf = n as f64;
    Ok(numerator / (nf * (nf + 1.0)))
}

/// Derivative of p * (1-p)^(n-1) in p, whose zero locates the optimum:
/// -p(n-1)(1-p)^(n-2) + (1-p)^(n-1).
pub fn correction_derivative(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Range("derivative needs n >= 2".into()));
    }
    check_p(p)?;
    let nf = n as f64;
    Ok((1.0 - p).powi(n as i32 - 2) * ((1.0 - p) - p * (nf - 1.0)))
}

/// Number of sign changes of `correction_derivative` over the interior
/// grid p = step, 2*step, ... < 1. Exact zeros carry no sign.
pub fn derivative_sign_changes(n: usize, step: f64) -> Result<usize> {
    if !(step > 0.0 && step < 1.0) {
        return Err(Error::Range(format!("grid step {step} outside (0, 1)")));
    }
    let mut changes = 0;
    let mut previous = 0i8;
    let mut k = 1usize;
    loop {
        let p = k as f64 * step;
        if p >= 1.0 {
            break;
        }
        let d = correction_derivative(n, p)?;
        let sign = if d > 0.0 {
            1
        } else if d < 0.0 {
            -1
        } else {
            0
        };
        if sign != 0 {
            if previous != 0 && sign != previous {
                changes += 1;
            }
            previous = sign;
        }
        k += 1;
    }
    Ok(changes)
}

/// Argmax of `single_correction_probability` over the grid
/// p = 0, step, 2*step, ..., 1 (first grid point wins ties).
pub fn grid_argmax_p(n: usize, step: f64) -> Result<f64> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(Error::Range(format!("grid step {step} outside (0, 1]")));
    }
    let mut best_p = 0.0;
    let mut best = f64::NEG_INFINITY;
    let mut k = 0usize;
    loop {
        let p = (k as f64 * step).min(1.0);
        let value = single_correction_probability(n, p)?;
        if value > best {
            best = value;
            best_p = p;
        }
        if p >= 1.0 {
            break;
        }
        k += 1;
    }
    Ok(best_p)
}

/// The error probability maximizing single-error correction: 1/n.
///
/// Cross-checks the closed form against a grid argmax at step 1e-4
/// before returning; the two must agree within 1e-3.
pub fn optimal_p(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Range("optimal p needs n >= 2".into()));
    }
    let p = 1.0 / n as f64;
    let numeric = grid_argmax_p(n, 1e-4)?;
    assert!(
        (numeric - p).abs() <= 1e-3,
        "grid argmax {numeric} disagrees with closed form {p} for n = {n}"
    );
    Ok(p)
}

/// Double-error correction capacity from an exhaustive census total:
/// census_total * p^2 * (1-p)^(n-2) / (n+1).
pub fn double_correction_capacity(n: usize, p: f64, census_total: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Range(
            "double-error capacity needs n >= 2".into(),
        ));
    }
    check_p(p)?;
    Ok(census_total as f64 * p * p * (1.0 - p).powi(n as i32 - 2) / (n as f64 + 1.0))
}

/// One evaluated point of the correction/capacity curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityPoint {
    pub n: usize,
    pub p: f64,
    pub single_correction: f64,
    pub single_capacity: f64,
    /// Present only when the caller supplied a double-error census total.
    pub double_capacity: Option<f64>,
}

/// Evaluates the curves over a strictly increasing grid in [0, 1].
///
/// `double_census_total`, when given, must be the exhaustive weight-2
/// census total for this n; it fills the double-capacity column.
pub fn capacity_curve(
    n: usize,
    p_grid: &[f64],
    double_census_total: Option<u64>,
) -> Result<Vec<CapacityPoint>> {
    for pair in p_grid.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::Range(format!(
                "grid not strictly increasing at {} -> {}",
                pair[0], pair[1]
            )));
        }
    }
    p_grid
        .iter()
        .map(|&p| {
            check_p(p)?;
            Ok(CapacityPoint {
                n,
                p,
                single_correction: single_correction_probability(n, p)?,
                single_capacity: single_correction_capacity(n, p)?,
                double_capacity: double_census_total
                    .map(|total| double_correction_capacity(n, p, total))
                    .transpose()?,
            })
        })
        .collect()
}

/// Formats `x` with the given number of significant digits, in plain
/// decimal for moderate magnitudes and scientific notation otherwise.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if magnitude < -4 || magnitude >= digits as i32 + 3 {
        format!("{:.*e}", digits - 1, x)
    } else {
        let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

/// Renders curve points as CSV with 12 significant digits and the
/// header `n,p,single_correction,single_capacity,double_capacity`.
/// The double column is empty when no census total was supplied.
pub fn curve_csv(points: &[CapacityPoint]) -> String {
    let mut out = String::from("n,p,single_correction,single_capacity,double_capacity\n");
    for point in points {
        let double = point
            .double_capacity
            .map(|d| format_significant(d, 12))
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            point.n,
            format_significant(point.p, 12),
            format_significant(point.single_correction, 12),
            format_significant(point.single_capacity, 12),
            double,
        ));
    }
    out
}

/// Tally of a Monte Carlo run: uniform codeword draws transmitted over
/// the binary symmetric channel, decoded, and scored on the trials
/// whose realized error weight was exactly 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloReport {
    pub trials: u64,
    /// Trials where exactly one bit flipped in transit.
    pub single_error_trials: u64,
    /// Single-error trials decoded back to the transmitted value.
    pub corrected: u64,
    /// corrected / single_error_trials; 0 when no single-error trials.
    pub empirical_conditional: f64,
    /// corrected / trials.
    pub empirical_unconditional: f64,
    /// Binomial standard error of the conditional rate,
    /// sqrt(q(1-q)/single_error_trials); 0 when no single-error trials.
    pub standard_error: f64,
}

impl MonteCarloReport {
    /// Binomial standard error of the unconditional rate over all trials.
    pub fn unconditional_standard_error(&self) -> f64 {
        let q = self.empirical_unconditional;
        (q * (1.0 - q) / self.trials as f64).sqrt()
    }
}

impl std::fmt::Display for MonteCarloReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "single-error trials: {}", self.single_error_trials)?;
        writeln!(f, "corrected: {}", self.corrected)?;
        writeln!(
            f,
            "conditional correction rate: {}",
            format_significant(self.empirical_conditional, 12)
        )?;
        writeln!(
            f,
            "unconditional correction rate: {}",
            format_significant(self.empirical_unconditional, 12)
        )?;
        write!(
            f,
            "conditional standard error: {}",
            format_significant(self.standard_error, 12)
        )
    }
}

/// `monte_carlo_estimate` over a fixed number of independently seeded
/// generator streams, merged deterministically: the report depends only
/// on (n, p, trials, seed, policy, streams), not on scheduling.
pub fn monte_carlo_estimate_streams(
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
    policy: TiePolicy,
    streams: u64,
) -> Result<MonteCarloReport> {
    if trials < 1 {
        return Err(Error::Range("trial count must be positive".into()));
    }
    if streams < 1 {
        return Err(Error::Range("stream count must be positive".into()));
    }
    check_p(p)?;
    let cb = Codebook::new(n)?;
    let partials: Vec<(u64, u64)> = (0..streams)
        .into_par_iter()
        .map(|i| {
            let chunk = trials / streams + u64::from(i < trials % streams);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let mut single = 0u64;
            let mut corrected = 0u64;
            for _ in 0..chunk {
                let v = rng.random_range(0..=n);
                let sent = &cb.codewords()[v];
                let received = transmit_with(sent, p, &mut rng);
                if received.hamming_distance(sent) == 1 {
                    single += 1;
                    let outcome = decode(&received, &cb, policy)
                        .expect("received word has codebook length");
                    if matches!(outcome, DecodeOutcome::Decoded { value, .. } if value == v) {
                        corrected += 1;
                    }
                }
            }
            (single, corrected)
        })
        .collect();
    let single_error_trials: u64 = partials.iter().map(|&(s, _)| s).sum();
    let corrected: u64 = partials.iter().map(|&(_, c)| c).sum();
    let empirical_conditional = if single_error_trials == 0 {
        0.0
    } else {
        corrected as f64 / single_error_trials as f64
    };
    let standard_error = if single_error_trials == 0 {
        0.0
    } else {
        (empirical_conditional * (1.0 - empirical_conditional) / single_error_trials as f64)
            .sqrt()
    };
    Ok(MonteCarloReport {
        trials,
        single_error_trials,
        corrected,
        empirical_conditional,
        empirical_unconditional: corrected as f64 / trials as f64,
        standard_error,
    })
}

/// Simulates `trials` uniform codeword transmissions over the binary
/// symmetric channel and scores single-error correction; single stream.
pub fn monte_carlo_estimate(
    n: usize,
    p: f64,
    trials: u64,
    seed: u64,
    policy: TiePolicy,
) -> Result<MonteCarloReport> {
    monte_carlo_estimate_streams(n, p, trials, seed, policy, 1)
}
