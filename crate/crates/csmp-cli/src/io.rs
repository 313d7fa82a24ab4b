//! Signal ingestion and the CLI error categories.

use csmp::Signal;
use std::fmt;
use std::path::Path;

/// CLI failure, carrying the exit-code category.
#[derive(Debug)]
pub enum CliError {
    /// Invalid parameters or parameter combinations. Exit code 2.
    Param(String),
    /// Unreadable, unwritable, or malformed files. Exit code 3.
    Io(String),
    /// Numerical guard tripped inside the decomposition. Exit code 4.
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Param(_) => 2,
            CliError::Io(_) => 3,
            CliError::Guard(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Param(msg) => write!(f, "parameter error: {msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
            CliError::Guard(msg) => write!(f, "numerical guard: {msg}"),
        }
    }
}

impl From<csmp::Error> for CliError {
    fn from(err: csmp::Error) -> Self {
        match err {
            csmp::Error::DegenerateAtom { .. } => CliError::Guard(err.to_string()),
            _ => CliError::Param(err.to_string()),
        }
    }
}

/// Accepted input encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    /// One real sample per line; `#` comments and one header line allowed.
    Csv,
    /// PCM 16-bit RIFF/WAVE; first channel, scaled by 1/32768.
    Wav,
}

pub fn read_signal(path: &Path, format: InputFormat) -> Result<Signal, CliError> {
    match format {
        InputFormat::Csv => read_csv_signal(path),
        InputFormat::Wav => read_wav_signal(path),
    }
}

fn read_csv_signal(path: &Path) -> Result<Signal, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mut samples = Vec::new();
    let mut header_allowed = true;
    for (index, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let field = trimmed.split(',').next().unwrap().trim();
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => {
                samples.push(v);
                header_allowed = false;
            }
            Ok(_) => {
                return Err(CliError::Io(format!(
                    "{} line {}: non-finite sample",
                    path.display(),
                    index + 1
                )));
            }
            Err(_) if header_allowed => header_allowed = false,
            Err(_) => {
                return Err(CliError::Io(format!(
                    "{} line {}: cannot parse {trimmed:?} as a sample",
                    path.display(),
                    index + 1
                )));
            }
        }
    }
    if samples.is_empty() {
        return Err(CliError::Io(format!("{}: no samples", path.display())));
    }
    Ok(Signal::new(samples))
}

fn read_wav_signal(path: &Path) -> Result<Signal, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let fail = |msg: &str| CliError::Io(format!("{}: {msg}", path.display()));

    if bytes.len() < 12 || &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(fail("not a RIFF/WAVE file"));
    }
    let mut fmt: Option<(u16, u16, u32, u16)> = None;
    let mut data: Option<(usize, usize)> = None;
    let mut at = 12usize;
    while at + 8 <= bytes.len() {
        let id = &bytes[at..at + 4];
        let size = u32::from_le_bytes(bytes[at + 4..at + 8].try_into().unwrap()) as usize;
        let body = at + 8;
        if body + size > bytes.len() {
            return Err(fail("truncated chunk"));
        }
        match id {
            b"fmt " => {
                if size < 16 {
                    return Err(fail("fmt chunk too short"));
                }
                fmt = Some((
                    u16::from_le_bytes(bytes[body..body + 2].try_into().unwrap()),
                    u16::from_le_bytes(bytes[body + 2..body + 4].try_into().unwrap()),
                    u32::from_le_bytes(bytes[body + 4..body + 8].try_into().unwrap()),
                    u16::from_le_bytes(bytes[body + 14..body + 16].try_into().unwrap()),
                ));
            }
            b"data" => data = Some((body, size)),
            _ => {}
        }
        at = body + size + size % 2;
    }

    let (audio_format, channels, sample_rate, bits) =
        fmt.ok_or_else(|| fail("missing fmt chunk"))?;
    if audio_format != 1 || bits != 16 {
        return Err(fail("only 16-bit PCM is supported"));
    }
    if channels == 0 {
        return Err(fail("fmt chunk declares zero channels"));
    }
    let (data_at, data_len) = data.ok_or_else(|| fail("missing data chunk"))?;

    let stride = 2 * channels as usize;
    let frames = data_len / stride;
    if frames == 0 {
        return Err(fail("no samples"));
    }
    let samples: Vec<f64> = (0..frames)
        .map(|i| {
            let o = data_at + i * stride;
            i16::from_le_bytes(bytes[o..o + 2].try_into().unwrap()) as f64 / 32768.0
        })
        .collect();
    Ok(Signal { samples, sample_rate: Some(sample_rate) })
}
