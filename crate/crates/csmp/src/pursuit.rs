//! The two-stage greedy pursuit. Each iteration scores every candidate
//! period of the current residual (Stage 1), walks the conjugate pairs of
//! the winning period's subspace for the largest coefficient (Stage 2),
//! and peels the winning plane's projection off the residual. Iteration
//! stops at the budget, at the energy tolerance, or when the residual
//! shows no periodic content at all.

use crate::error::Error;
use crate::periodicity::period_energy_table;
use crate::ramanujan::PeriodStructure;
use crate::subspace::{Atom, Component};
use std::collections::BTreeMap;

/// How the stopping tolerance is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToleranceMode {
    /// Stop once ‖r‖²/‖x‖² falls to the tolerance. The default: it is
    /// scale-free, so the same setting works across signal amplitudes.
    Relative,
    /// Stop once ‖r‖₂ falls to the tolerance.
    Absolute,
}

/// Parameters of one pursuit run.
#[derive(Debug, Clone, PartialEq)]
pub struct PursuitParams {
    /// Largest candidate period Q scanned by Stage 1.
    pub max_period: usize,
    /// Iteration budget L.
    pub max_iterations: usize,
    /// Stopping tolerance ε, interpreted per `tolerance_mode`.
    pub tolerance: f64,
    pub tolerance_mode: ToleranceMode,
}

impl PursuitParams {
    /// Params with the given period bound and budget, running to the
    /// budget (tolerance 0).
    pub fn new(max_period: usize, max_iterations: usize) -> Self {
        PursuitParams {
            max_period,
            max_iterations,
            tolerance: 0.0,
            tolerance_mode: ToleranceMode::Relative,
        }
    }
}

/// Result of a pursuit run.
#[derive(Debug, Clone)]
pub struct Decomposition {
    components: Vec<Component>,
    residual: Vec<f64>,
    /// ‖r‖² after 0, 1, 2, ... extractions; the first entry is ‖x‖².
    residual_energy_trace: Vec<f64>,
    input_energy: f64,
    n_len: usize,
}

impl Decomposition {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn residual(&self) -> &[f64] {
        &self.residual
    }

    pub fn residual_energy_trace(&self) -> &[f64] {
        &self.residual_energy_trace
    }

    pub fn input_energy(&self) -> f64 {
        self.input_energy
    }

    pub fn n_len(&self) -> usize {
        self.n_len
    }

    /// Sum of all extracted component vectors; adding the residual gives
    /// back the input except for rounding.
    pub fn reconstruct(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.n_len];
        for comp in &self.components {
            for (acc, v) in out.iter_mut().zip(comp.vector()) {
                *acc += v;
            }
        }
        out
    }

    /// The residual-energy trace normalized by the input energy; all zeros
    /// for a zero input.
    pub fn error_rate_trace(&self) -> Vec<f64> {
        if self.input_energy == 0.0 {
            return vec![0.0; self.residual_energy_trace.len()];
        }
        self.residual_energy_trace.iter().map(|e| e / self.input_energy).collect()
    }

    /// Aggregates component energies by period.
    pub fn periodic_spectrum(&self) -> PeriodicSpectrum {
        let mut strengths: BTreeMap<usize, f64> = BTreeMap::new();
        for comp in &self.components {
            *strengths.entry(comp.atom.q).or_insert(0.0) += comp.energy;
        }
        PeriodicSpectrum { strengths }
    }
}

/// Energy per extracted period: the periodic spectrum of a decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicSpectrum {
    strengths: BTreeMap<usize, f64>,
}

impl PeriodicSpectrum {
    /// Energy attributed to period q; 0 when the pursuit never chose it.
    pub fn strength(&self, q: usize) -> f64 {
        self.strengths.get(&q).copied().unwrap_or(0.0)
    }

    /// Total extracted energy, Σ over periods.
    pub fn total(&self) -> f64 {
        self.strengths.values().sum()
    }

    /// (period, strength) pairs in increasing period order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.strengths.iter().map(|(&q, &s)| (q, s))
    }

    pub fn is_empty(&self) -> bool {
        self.strengths.is_empty()
    }
}

fn energy(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

fn stop_reached(residual_energy: f64, input_energy: f64, params: &PursuitParams) -> bool {
    match params.tolerance_mode {
        ToleranceMode::Relative => residual_energy <= params.tolerance * input_energy,
        ToleranceMode::Absolute => residual_energy.sqrt() <= params.tolerance,
    }
}

/// Runs the two-stage pursuit on a real signal.
pub fn decompose(x: &[f64], params: &PursuitParams) -> Result<Decomposition, Error> {
    let n = x.len();
    if n == 0 {
        return Err(Error::EmptySignal);
    }
    if params.max_period == 0 {
        return Err(Error::ZeroPeriod);
    }
    if params.max_period > n {
        return Err(Error::PeriodOutOfRange { q: params.max_period, n_len: n });
    }
    if params.max_iterations == 0 {
        return Err(Error::InvalidParameter("iteration budget must be at least 1".into()));
    }
    if !(params.tolerance >= 0.0) || !params.tolerance.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be finite and non-negative, got {}",
            params.tolerance
        )));
    }

    let input_energy = energy(x);
    let mut residual = x.to_vec();
    let mut residual_energy = input_energy;
    let mut trace = vec![input_energy];
    let mut components: Vec<Component> = Vec::new();

    while components.len() < params.max_iterations {
        if stop_reached(residual_energy, input_energy, params) {
            break;
        }

        // Stage 1: dominant period of the residual
        let table = period_energy_table(&residual, params.max_period)?;
        let Some(q) = table.dominant_period() else {
            break;
        };

        // Stage 2: strongest conjugate pair within S_q
        let structure = PeriodStructure::new(q)?;
        let mut best: Option<Component> = None;
        for pair in structure.pairs() {
            let atom = Atom::new(q, pair.index, n)?;
            let candidate = atom.project(&residual)?;
            let better = best
                .as_ref()
                .map_or(true, |b| candidate.alpha.norm_sqr() > b.alpha.norm_sqr());
            if better {
                best = Some(candidate);
            }
        }
        let chosen = best.expect("every period has at least one conjugate pair");

        for (r, v) in residual.iter_mut().zip(chosen.vector()) {
            *r -= v;
        }
        residual_energy = energy(&residual);
        trace.push(residual_energy);
        components.push(chosen);
    }

    Ok(Decomposition {
        components,
        residual,
        residual_energy_trace: trace,
        input_energy,
        n_len: n,
    })
}
