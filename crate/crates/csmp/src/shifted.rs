//! Windowed pursuit for signals whose hidden periods drift over time.
//!
//! The signal is cut into rectangular windows advancing by a fixed hop,
//! each window is decomposed independently, and the per-window spectra are
//! stacked into a time-period plane. Windows share no state, so they run
//! in parallel under the `parallel` feature; rows are written by window
//! index, which keeps the plane identical under any evaluation order.

use crate::error::Error;
use crate::exec;
use crate::pursuit::{decompose, PursuitParams, ToleranceMode};

/// Parameters of a windowed run.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowParams {
    /// Largest candidate period Q; must stay below the window length.
    pub max_period: usize,
    /// Window length W in samples.
    pub window: usize,
    /// Hop H between window starts.
    pub hop: usize,
    /// Pursuit iterations per window.
    pub iterations: usize,
}

impl WindowParams {
    /// Params with hop W/4 and a 10-iteration budget per window.
    pub fn new(max_period: usize, window: usize) -> Self {
        WindowParams { max_period, window, hop: (window / 4).max(1), iterations: 10 }
    }
}

/// Per-window periodic spectra on a common period axis.
#[derive(Debug, Clone, PartialEq)]
pub struct TimePeriodPlane {
    window: usize,
    hop: usize,
    max_period: usize,
    window_centers: Vec<f64>,
    cells: Vec<Vec<f64>>,
}

/// Dominant period of one window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrackPoint {
    /// Center of the window, in fractional sample index.
    pub center: f64,
    /// Strongest period of the window; 1 by the tie convention when the
    /// window is empty (zero strength everywhere).
    pub period: usize,
    /// Strength of that period; 0 flags an empty window.
    pub strength: f64,
}

impl TimePeriodPlane {
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn hop(&self) -> usize {
        self.hop
    }

    pub fn max_period(&self) -> usize {
        self.max_period
    }

    pub fn num_windows(&self) -> usize {
        self.cells.len()
    }

    /// Fractional sample index of each window center.
    pub fn window_centers(&self) -> &[f64] {
        &self.window_centers
    }

    /// Strength of period q in window w.
    pub fn strength(&self, w: usize, q: usize) -> f64 {
        self.cells[w][q]
    }

    /// The strongest period per window, ties resolved toward the smaller
    /// period.
    pub fn dominant_track(&self) -> Vec<TrackPoint> {
        self.window_centers
            .iter()
            .zip(&self.cells)
            .map(|(&center, row)| {
                let mut period = 1;
                let mut strength = 0.0;
                for (q, &s) in row.iter().enumerate().skip(1) {
                    if s > strength {
                        period = q;
                        strength = s;
                    }
                }
                TrackPoint { center, period, strength }
            })
            .collect()
    }
}

/// Decomposes every window of x and stacks the spectra into a plane.
pub fn decompose_windows(x: &[f64], params: &WindowParams) -> Result<TimePeriodPlane, Error> {
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    if params.max_period == 0 {
        return Err(Error::ZeroPeriod);
    }
    if params.window <= params.max_period {
        return Err(Error::WindowTooSmall {
            window: params.window,
            max_period: params.max_period,
        });
    }
    if x.len() < params.window {
        return Err(Error::SignalTooShort { n_len: x.len(), window: params.window });
    }
    if params.hop == 0 {
        return Err(Error::InvalidParameter("hop must be at least 1".into()));
    }
    if params.iterations == 0 {
        return Err(Error::InvalidParameter("per-window iterations must be at least 1".into()));
    }

    let num_windows = (x.len() - params.window) / params.hop + 1;
    let inner = PursuitParams {
        max_period: params.max_period,
        max_iterations: params.iterations,
        tolerance: 0.0,
        tolerance_mode: ToleranceMode::Relative,
    };

    let rows: Vec<Result<Vec<f64>, Error>> = exec::map_range(0, num_windows, |w| {
        let start = w * params.hop;
        let segment = &x[start..start + params.window];
        let dec = decompose(segment, &inner)?;
        let spectrum = dec.periodic_spectrum();
        let mut row = vec![0.0; params.max_period + 1];
        for (q, s) in spectrum.iter() {
            row[q] = s;
        }
        Ok(row)
    });
    let cells = rows.into_iter().collect::<Result<Vec<_>, Error>>()?;

    let window_centers = (0..num_windows)
        .map(|w| (w * params.hop) as f64 + (params.window - 1) as f64 / 2.0)
        .collect();

    Ok(TimePeriodPlane {
        window: params.window,
        hop: params.hop,
        max_period: params.max_period,
        window_centers,
        cells,
    })
}
