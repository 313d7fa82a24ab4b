use std::fmt;

/// Failure modes surfaced by the decomposition routines.
///
/// Everything here is a precondition violation except [`Error::DegenerateAtom`],
/// which is a numerical guard: the conjugate-pair projection divides by
/// `1 - |c|^2` and refuses to proceed when that denominator collapses.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Periods start at 1; q = 0 has no residues.
    ZeroPeriod,
    /// Candidate period exceeds the signal length.
    PeriodOutOfRange { q: usize, n_len: usize },
    /// Conjugate-pair index outside `1..=pair_count(q)`.
    PairIndexOutOfRange { q: usize, index: usize, pairs: usize },
    /// Input signal has no samples.
    EmptySignal,
    /// Vector length does not match the atom's sampling length.
    LengthMismatch { expected: usize, got: usize },
    /// Projection denominator `1 - |c|^2` fell below the guard threshold.
    DegenerateAtom { q: usize, index: usize, n_len: usize },
    /// Window length must strictly exceed the largest candidate period.
    WindowTooSmall { window: usize, max_period: usize },
    /// Signal shorter than a single analysis window.
    SignalTooShort { n_len: usize, window: usize },
    /// Any other rejected parameter, with a human-readable reason.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPeriod => write!(f, "period must be at least 1"),
            Error::PeriodOutOfRange { q, n_len } => {
                write!(f, "period {q} exceeds signal length {n_len}")
            }
            Error::PairIndexOutOfRange { q, index, pairs } => {
                write!(f, "pair index {index} outside 1..={pairs} for period {q}")
            }
            Error::EmptySignal => write!(f, "signal is empty"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected vector of length {expected}, got {got}")
            }
            Error::DegenerateAtom { q, index, n_len } => write!(
                f,
                "atom (q = {q}, i = {index}) is numerically self-conjugate at length {n_len}"
            ),
            Error::WindowTooSmall { window, max_period } => write!(
                f,
                "window length {window} must exceed the largest candidate period {max_period}"
            ),
            Error::SignalTooShort { n_len, window } => {
                write!(f, "signal length {n_len} is shorter than one window of {window}")
            }
            Error::InvalidParameter(reason) => write!(f, "invalid parameter: {reason}"),
        }
    }
}

impl std::error::Error for Error {}
