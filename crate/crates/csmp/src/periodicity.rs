//! Stage-1 periodicity machinery: linear autocorrelation, per-period
//! energy estimates, the divisor-subtraction recursion, and the weighted
//! metric that picks the dominant hidden period of a residual.
//!
//! The estimate for a candidate period q reads the autocorrelation at the
//! lags q, 2q, ... and scores how much energy a q-periodic component would
//! explain; the recursion then removes the share already attributed to
//! proper divisors of q, and the metric (N + q)/(2q) · energy compensates
//! for the dimension of the candidate subspace.

use crate::error::Error;
use crate::exec;

/// Linear, non-circular autocorrelation: out[k] = Σ x[n]·x[n+k] for
/// k in [0, N).
pub fn autocorrelation(x: &[f64]) -> Result<Vec<f64>, Error> {
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    let n = x.len();
    Ok(exec::map_range(0, n, |k| {
        x[..n - k].iter().zip(&x[k..]).map(|(a, b)| a * b).sum()
    }))
}

fn estimate_from_acf(acf: &[f64], q: usize) -> f64 {
    let n = acf.len();
    let m = n / q;
    let mut lag_sum = 0.0;
    for l in 1..m {
        lag_sum += acf[l * q];
    }
    let estimate = q as f64 / n as f64 * (acf[0] + 2.0 * lag_sum);
    estimate.max(0.0)
}

/// Autocorrelation-based estimate of the energy a q-periodic component
/// contributes to x: (q/N)·(φ(0) + 2·Σ_{l≥1} φ(lq)), clamped below at 0.
///
/// Recomputes the autocorrelation; when scanning many periods build a
/// [`PeriodEnergyTable`] instead, which shares one autocorrelation pass.
pub fn periodic_energy_estimate(x: &[f64], q: usize) -> Result<f64, Error> {
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    if q == 0 {
        return Err(Error::ZeroPeriod);
    }
    if q > x.len() {
        return Err(Error::PeriodOutOfRange { q, n_len: x.len() });
    }
    let acf = autocorrelation(x)?;
    Ok(estimate_from_acf(&acf, q))
}

/// Per-period energy estimates, divisor-cleaned energies, and periodicity
/// metrics for every candidate period in [1, max_q].
#[derive(Debug, Clone)]
pub struct PeriodEnergyTable {
    n_len: usize,
    estimates: Vec<f64>,
    energies: Vec<f64>,
    metrics: Vec<f64>,
}

impl PeriodEnergyTable {
    pub fn max_period(&self) -> usize {
        self.metrics.len() - 1
    }

    pub fn n_len(&self) -> usize {
        self.n_len
    }

    /// Raw estimate for q, before divisor subtraction.
    pub fn estimate(&self, q: usize) -> f64 {
        self.estimates[q]
    }

    /// Energy attributed to exactly-period-q content.
    pub fn energy(&self, q: usize) -> f64 {
        self.energies[q]
    }

    /// Periodicity metric (N + q)/(2q) · energy(q).
    pub fn metric(&self, q: usize) -> f64 {
        self.metrics[q]
    }

    /// The period with the largest metric, ties resolved toward the
    /// smaller period; `None` when every metric is zero (no periodic
    /// content to report).
    pub fn dominant_period(&self) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for q in 1..=self.max_period() {
            let m = self.metrics[q];
            if best.map_or(true, |(_, bm)| m > bm) {
                best = Some((q, m));
            }
        }
        best.and_then(|(q, m)| if m > 0.0 { Some(q) } else { None })
    }
}

/// Builds the Stage-1 table for all candidate periods in [1, max_q] from a
/// single autocorrelation pass.
pub fn period_energy_table(x: &[f64], max_q: usize) -> Result<PeriodEnergyTable, Error> {
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    if max_q == 0 {
        return Err(Error::ZeroPeriod);
    }
    if max_q > x.len() {
        return Err(Error::PeriodOutOfRange { q: max_q, n_len: x.len() });
    }
    let n = x.len();
    let acf = autocorrelation(x)?;

    let mut estimates = vec![0.0];
    estimates.extend(exec::map_range(1, max_q + 1, |q| estimate_from_acf(&acf, q)));

    // proper-divisor subtraction, in increasing q so every divisor is ready
    let mut energies = vec![0.0; max_q + 1];
    for q in 1..=max_q {
        let mut energy = estimates[q];
        for d in 1..q {
            if q % d == 0 {
                energy -= energies[d];
            }
        }
        energies[q] = energy.max(0.0);
    }

    let mut metrics = vec![0.0; max_q + 1];
    for q in 1..=max_q {
        metrics[q] = (n + q) as f64 / (2 * q) as f64 * energies[q];
    }

    Ok(PeriodEnergyTable { n_len: n, estimates, energies, metrics })
}

/// The dominant hidden period of x over candidates [1, max_q], or `None`
/// when the signal shows no periodic content.
pub fn dominant_period(x: &[f64], max_q: usize) -> Result<Option<usize>, Error> {
    Ok(period_energy_table(x, max_q)?.dominant_period())
}
