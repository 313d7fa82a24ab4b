//! Ramanujan-sum matched filter, the classical single-pass baseline the
//! pursuit is compared against: one unit-normalized periodic template per
//! candidate period, each scored by its squared projection coefficient.
//!
//! A template is c_q(n) extended periodically to the signal length. Since
//! each period contributes a single direction instead of a φ(q)-dimensional
//! subspace, large hidden periods are captured only partially.

use crate::error::Error;
use crate::exec;
use crate::ramanujan::ramanujan_sum;

/// Squared normalized projections ⟨x, ĉ_q⟩² for q in [1, max_q].
#[derive(Debug, Clone)]
pub struct RftSpectrum {
    strengths: Vec<f64>,
}

impl RftSpectrum {
    pub fn max_period(&self) -> usize {
        self.strengths.len() - 1
    }

    /// Strength at period q.
    pub fn strength(&self, q: usize) -> f64 {
        self.strengths[q]
    }

    /// (period, strength) pairs in increasing period order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.strengths.iter().enumerate().skip(1).map(|(q, &s)| (q, s))
    }
}

/// Projects x onto every normalized Ramanujan-sum template up to max_q.
pub fn rft_spectrum(x: &[f64], max_q: usize) -> Result<RftSpectrum, Error> {
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    if max_q == 0 {
        return Err(Error::ZeroPeriod);
    }
    let mut strengths = vec![0.0];
    strengths.extend(exec::map_range(1, max_q + 1, |q| {
        let base: Vec<f64> = (0..q)
            .map(|n| ramanujan_sum(q, n).expect("q >= 1"))
            .collect();
        let mut dot = 0.0;
        let mut norm_sq = 0.0;
        for (n, &xn) in x.iter().enumerate() {
            let t = base[n % q];
            dot += xn * t;
            norm_sq += t * t;
        }
        let coeff = dot / norm_sq.sqrt();
        coeff * coeff
    }));
    Ok(RftSpectrum { strengths })
}
