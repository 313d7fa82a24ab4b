//! Decomposition of real discrete signals into hidden periodic components.
//!
//! A signal is scanned for periods whose Ramanujan subspace explains a
//! large share of its energy, and a greedy two-stage pursuit peels off one
//! conjugate-pair projection at a time: Stage 1 ranks candidate periods of
//! the current residual through an autocorrelation-based energy recursion,
//! Stage 2 picks the strongest exponential pair inside the winning
//! subspace. The result is a periodic spectrum (energy per hidden period),
//! the extracted components themselves, and the residual.
//!
//! Modules:
//! - [`ramanujan`]: totients, coprime residues, Ramanujan sums, conjugate
//!   residue pairing.
//! - [`subspace`]: conjugate-pair atoms and their closed-form projection.
//! - [`periodicity`]: Stage-1 autocorrelation estimates and period metrics.
//! - [`pursuit`]: the decomposition loop and the periodic spectrum.
//! - [`baseline`]: the single-template Ramanujan matched filter to compare
//!   against.
//! - [`shifted`]: windowed pursuit for time-varying periods.
//! - [`signals`]: deterministic generators for tests, benches, and the CLI.
//!
//! The data-parallel inner loops (autocorrelation lags, per-period
//! estimates, per-window decompositions, per-period baseline projections)
//! run through rayon when the default `parallel` feature is on and fall
//! back to sequential loops without it; either way the outputs are
//! identical bit for bit.

pub mod baseline;
mod error;
mod exec;
pub mod periodicity;
pub mod pursuit;
pub mod ramanujan;
pub mod shifted;
pub mod signals;
pub mod subspace;

pub use error::Error;
pub use pursuit::{decompose, Decomposition, PeriodicSpectrum, PursuitParams, ToleranceMode};
pub use shifted::{decompose_windows, TimePeriodPlane, TrackPoint, WindowParams};
pub use subspace::{Atom, Component};

/// A real-valued sampled signal with an optional sample rate in Hz (kept
/// when the signal was read from an audio file).
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    pub samples: Vec<f64>,
    pub sample_rate: Option<u32>,
}

impl Signal {
    pub fn new(samples: Vec<f64>) -> Self {
        Signal { samples, sample_rate: None }
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}
