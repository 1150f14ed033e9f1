//! The two-delay linear recurrence `X(t) = −b·X(t−(n−m)) − c·X(t−n)`.
//!
//! Its characteristic polynomial is `ζⁿ + b·ζᵐ + c`, so the recurrence is
//! asymptotically stable exactly when that trinomial is Schur stable; the
//! simulator ties the stability verdicts back to observable dynamics.

use crate::error::{Error, Result};
use crate::trinomial::Complex;
use std::io::{self, Write};

/// Trajectories are cut off once a sample exceeds this magnitude.
const DIVERGENCE_GUARD: f64 = 1e300;

/// Window maxima below this are treated as vanished (decayed past double
/// precision) and excluded from rate fitting.
const UNDERFLOW_FLOOR: f64 = 1e-280;

#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceSpec {
    pub n: u32,
    pub m: u32,
    pub b: Complex,
    pub c: Complex,
    /// Initial string `φ₀, …, φ_{n−1}`; must hold exactly `n` values.
    pub initial: Vec<Complex>,
    /// Total number of samples to produce, including the initial string.
    pub horizon: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<Complex>,
    /// A sample exceeded the overflow guard; the trajectory stops there.
    pub divergent: bool,
}

/// Steps the recurrence from the initial string over the requested horizon.
pub fn simulate(spec: &RecurrenceSpec) -> Result<Trajectory> {
    let n = spec.n as usize;
    if spec.m == 0 || spec.n <= spec.m {
        return Err(Error::InvalidExponents {
            n: spec.n,
            m: spec.m,
        });
    }
    if spec.initial.len() != n {
        return Err(Error::PreconditionViolated(format!(
            "initial string must hold n={n} values, got {}",
            spec.initial.len()
        )));
    }
    if spec.horizon < n {
        return Err(Error::PreconditionViolated(format!(
            "horizon {} is shorter than the initial string {n}",
            spec.horizon
        )));
    }
    let gap = (spec.n - spec.m) as usize;
    let mut samples = Vec::with_capacity(spec.horizon);
    samples.extend_from_slice(&spec.initial);
    let mut divergent = false;
    for t in n..spec.horizon {
        let value = -spec.b * samples[t - gap] - spec.c * samples[t - n];
        if !value.is_finite() || value.norm() > DIVERGENCE_GUARD {
            divergent = true;
            break;
        }
        samples.push(value);
    }
    Ok(Trajectory { samples, divergent })
}

/// Default horizon: long enough for the dominant mode `ρ` to decay to 1e−6
/// when `ρ < 1` is known, otherwise `200·n`.
pub fn default_horizon(n: u32, rho: Option<f64>) -> usize {
    let n = n as usize;
    let steps = match rho {
        Some(r) if r > 0.0 && r < 1.0 => {
            let needed = (1e-6f64.ln() / r.ln()).ceil();
            (50 * n).max(needed as usize)
        }
        _ => 200 * n,
    };
    steps.clamp(4 * n, 2_000_000)
}

/// Least-squares slope of `ln(window max)` against time, windows of length
/// `n`; negative means decay. Window maxima rather than raw samples track the
/// dominant-root envelope through the zero crossings of oscillatory
/// solutions.
pub fn empirical_decay_rate(trajectory: &Trajectory, n: u32) -> Result<f64> {
    if trajectory.divergent {
        return Err(Error::DegenerateTrajectory("trajectory diverged"));
    }
    let n = n as usize;
    if trajectory.samples.len() < 4 * n {
        return Err(Error::DegenerateTrajectory("fewer than 4n samples"));
    }
    let maxima: Vec<f64> = trajectory
        .samples
        .chunks_exact(n)
        .map(|w| w.iter().map(|z| z.norm()).fold(0.0, f64::max))
        .collect();
    // Skip the leading quarter: early windows mix in subdominant modes.
    let start = maxima.len() / 4;
    let points: Vec<(f64, f64)> = maxima
        .iter()
        .enumerate()
        .skip(start)
        .filter(|(_, m)| **m > UNDERFLOW_FLOOR)
        .map(|(i, m)| ((i * n) as f64, m.ln()))
        .collect();
    if points.len() < 3 {
        return Err(Error::DegenerateTrajectory(
            "trajectory is zero or vanished within the fit range",
        ));
    }
    let len = points.len() as f64;
    let mean_t = points.iter().map(|(t, _)| t).sum::<f64>() / len;
    let mean_v = points.iter().map(|(_, v)| v).sum::<f64>() / len;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (t, v) in &points {
        cov += (t - mean_t) * (v - mean_v);
        var += (t - mean_t) * (t - mean_t);
    }
    if var == 0.0 {
        return Err(Error::DegenerateTrajectory("degenerate fit range"));
    }
    Ok(cov / var)
}

/// Writes the trajectory as `t,re,im,modulus` rows.
pub fn write_csv<W: Write>(mut out: W, trajectory: &Trajectory) -> io::Result<()> {
    writeln!(out, "t,re,im,modulus")?;
    for (t, z) in trajectory.samples.iter().enumerate() {
        writeln!(out, "{t},{:.17e},{:.17e},{:.17e}", z.re, z.im, z.norm())?;
    }
    Ok(())
}
