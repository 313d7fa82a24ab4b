//! Deterministic signal generators used by the CLI, the tests, and the
//! benches.

use crate::error::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use std::f64::consts::TAU;

/// Sum of unit cosines, one per listed period: x[n] = Σ cos(2πn/q).
pub fn sum_of_cosines(periods: &[usize], n_len: usize) -> Result<Vec<f64>, Error> {
    if n_len == 0 {
        return Err(Error::EmptySignal);
    }
    if periods.is_empty() {
        return Err(Error::InvalidParameter("at least one period is required".into()));
    }
    if periods.contains(&0) {
        return Err(Error::ZeroPeriod);
    }
    let mut x = vec![0.0; n_len];
    for &q in periods {
        for (n, sample) in x.iter_mut().enumerate() {
            *sample += (TAU * (n % q) as f64 / q as f64).cos();
        }
    }
    Ok(x)
}

/// Inverse chirp x(t) = sin(1/(a·t)) sampled on the grid t0, t0+dt, ...,
/// stopping at t1 (the endpoint is kept when it lands within dt/2 of the
/// grid). Its instantaneous period grows quadratically with t.
pub fn inverse_chirp(a: f64, t0: f64, t1: f64, dt: f64) -> Result<Vec<f64>, Error> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidParameter(format!("chirp constant must be positive, got {a}")));
    }
    if !(t0 > 0.0) || !(t1 > t0) {
        return Err(Error::InvalidParameter(format!(
            "time span must satisfy 0 < t0 < t1, got [{t0}, {t1}]"
        )));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::InvalidParameter(format!("sampling step must be positive, got {dt}")));
    }
    let steps = ((t1 - t0) / dt).round() as usize;
    Ok((0..=steps)
        .map(|k| {
            let t = t0 + k as f64 * dt;
            (1.0 / (a * t)).sin()
        })
        .collect())
}

/// Standard normal white noise from a seeded ChaCha8 stream, so the same
/// seed reproduces the same samples on every platform.
pub fn white_noise(n_len: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_len).map(|_| StandardNormal.sample(&mut rng)).collect()
}
