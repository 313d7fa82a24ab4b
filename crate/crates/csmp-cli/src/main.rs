//! Command-line front end: synthesizes test signals, runs the Stage-1
//! scan, the full pursuit, the windowed tracker, and the Ramanujan-sum
//! baseline, and serializes results as commented CSV or JSON.

mod io;
mod output;

use clap::{Args, Parser, Subcommand};
use csmp::baseline::rft_spectrum;
use csmp::periodicity::period_energy_table;
use csmp::signals::{inverse_chirp, sum_of_cosines, white_noise};
use csmp::{decompose, decompose_windows, PursuitParams, Signal, ToleranceMode, WindowParams};
use io::{read_signal, CliError, InputFormat};
use output::{
    csv_doc, float9, json_doc, sample_rows, sample_values, sig9, strength_rows, strength_values,
    write_file, Params,
};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "csmp", version, about = "Hidden-period decomposition of real discrete signals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a synthetic test signal
    Synth {
        #[command(subcommand)]
        kind: SynthKind,
    },
    /// Write the periodic-energy table of a signal (the pursuit's Stage-1 view)
    Spectrum(SpectrumArgs),
    /// Decompose a signal and write its periodic spectrum
    Decompose(DecomposeArgs),
    /// Decompose a signal window by window and write the time-period plane
    Track(TrackArgs),
    /// Write the Ramanujan-sum projection spectrum (one direction per period)
    Baseline(BaselineArgs),
}

#[derive(Subcommand)]
enum SynthKind {
    /// Sum of unit-amplitude cosines, one per period
    Cosines {
        /// Comma-separated component periods
        #[arg(long, value_delimiter = ',', required = true)]
        periods: Vec<usize>,
        /// Number of samples
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// sin(1/(a t)) sweep whose instantaneous period grows quadratically
    Chirp {
        /// Sweep constant a
        #[arg(long)]
        rate: f64,
        /// Start time in seconds
        #[arg(long)]
        start: f64,
        /// End time in seconds
        #[arg(long)]
        end: f64,
        /// Sampling interval in seconds
        #[arg(long)]
        step: f64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Seeded unit-variance Gaussian noise
    Noise {
        /// Number of samples
        #[arg(long)]
        length: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct OutArgs {
    /// Output path
    #[arg(long, short = 'o')]
    output: PathBuf,
    /// Write JSON instead of CSV
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InArgs {
    /// Input signal path
    #[arg(long)]
    input: PathBuf,
    /// Input encoding
    #[arg(long, value_enum, default_value_t = InputFormat::Csv)]
    format: InputFormat,
}

impl InArgs {
    fn read(&self) -> Result<Signal, CliError> {
        read_signal(&self.input, self.format)
    }

    fn describe(&self, params: &mut Params) {
        params.push("input", self.input.to_string_lossy().into_owned());
        params.push("format", match self.format {
            InputFormat::Csv => "csv",
            InputFormat::Wav => "wav",
        });
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InArgs,
    /// Largest candidate period Q
    #[arg(short = 'Q', long = "max-period")]
    max_period: usize,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    input: InArgs,
    /// Largest candidate period Q
    #[arg(short = 'Q', long = "max-period")]
    max_period: usize,
    /// Iteration budget L
    #[arg(short = 'L', long = "iters", default_value_t = 20)]
    iters: usize,
    /// Stopping tolerance on the relative residual energy; 0 runs the full budget
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
    /// Interpret --tol as an absolute residual norm instead
    #[arg(long)]
    absolute: bool,
    #[command(flatten)]
    out: OutArgs,
    /// Also write the per-iteration energy trace
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Also write the final residual signal
    #[arg(long)]
    residual: Option<PathBuf>,
    /// Also write the reconstruction (input minus residual)
    #[arg(long)]
    reconstruction: Option<PathBuf>,
}

#[derive(Args)]
struct TrackArgs {
    #[command(flatten)]
    input: InArgs,
    /// Largest candidate period Q; must stay below the window length
    #[arg(short = 'Q', long = "max-period")]
    max_period: usize,
    /// Window length W in samples
    #[arg(short = 'W', long)]
    window: usize,
    /// Hop H between window starts; defaults to W/4
    #[arg(short = 'H', long)]
    hop: Option<usize>,
    /// Pursuit iterations per window
    #[arg(long, default_value_t = 10)]
    window_iters: usize,
    #[command(flatten)]
    out: OutArgs,
    /// Also write the strongest period per window
    #[arg(long)]
    dominant: Option<PathBuf>,
}

#[derive(Args)]
struct BaselineArgs {
    #[command(flatten)]
    input: InArgs,
    /// Largest candidate period Q
    #[arg(short = 'Q', long = "max-period")]
    max_period: usize,
    #[command(flatten)]
    out: OutArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Synth { kind } => run_synth(kind),
        Command::Spectrum(args) => run_spectrum(args),
        Command::Decompose(args) => run_decompose(args),
        Command::Track(args) => run_track(args),
        Command::Baseline(args) => run_baseline(args),
    }
}

fn run_synth(kind: SynthKind) -> Result<(), CliError> {
    let mut params = Params::new("synth");
    let (samples, out) = match kind {
        SynthKind::Cosines { periods, length, out } => {
            params.push("kind", "cosines");
            params.push("periods", periods.clone());
            params.push("length", length);
            (sum_of_cosines(&periods, length)?, out)
        }
        SynthKind::Chirp { rate, start, end, step, out } => {
            params.push("kind", "chirp");
            params.push("rate", rate);
            params.push("start", start);
            params.push("end", end);
            params.push("step", step);
            (inverse_chirp(rate, start, end, step)?, out)
        }
        SynthKind::Noise { length, seed, out } => {
            params.push("kind", "noise");
            params.push("length", length);
            params.push("seed", seed);
            if length == 0 {
                return Err(CliError::Param("length must be at least 1".into()));
            }
            (white_noise(length, seed), out)
        }
    };
    write_signal_file(&out, &params, &Signal::new(samples))
}

fn run_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let signal = args.input.read()?;
    let mut params = Params::new("spectrum");
    args.input.describe(&mut params);
    params.push("max_period", args.max_period);
    describe_rate(&mut params, &signal);

    let table = period_energy_table(&signal.samples, args.max_period)?;
    let content = if args.out.json {
        let rows: Vec<Value> = (1..=args.max_period)
            .map(|q| {
                json!({
                    "q": q,
                    "estimate": sig9(table.estimate(q)),
                    "energy": sig9(table.energy(q)),
                    "metric": sig9(table.metric(q)),
                })
            })
            .collect();
        json_doc(&params, vec![("max_q", args.max_period.into()), ("rows", Value::Array(rows))])
    } else {
        let rows = (1..=args.max_period).map(|q| {
            format!(
                "{q},{},{},{}",
                float9(table.estimate(q)),
                float9(table.energy(q)),
                float9(table.metric(q))
            )
        });
        csv_doc(&params, "q,estimate,energy,metric", rows)
    };
    write_file(&args.out.output, &content)
}

fn run_decompose(args: DecomposeArgs) -> Result<(), CliError> {
    let signal = args.input.read()?;
    let mut params = Params::new("decompose");
    args.input.describe(&mut params);
    params.push("max_period", args.max_period);
    params.push("iters", args.iters);
    params.push("tol", args.tol);
    params.push("tol_mode", if args.absolute { "absolute" } else { "relative" });
    describe_rate(&mut params, &signal);

    let pursuit = PursuitParams {
        max_period: args.max_period,
        max_iterations: args.iters,
        tolerance: args.tol,
        tolerance_mode: if args.absolute { ToleranceMode::Absolute } else { ToleranceMode::Relative },
    };
    let dec = decompose(&signal.samples, &pursuit)?;
    let spectrum = dec.periodic_spectrum();

    let content = if args.out.json {
        json_doc(
            &params,
            vec![
                ("max_q", args.max_period.into()),
                ("input_energy", sig9(dec.input_energy()).into()),
                ("strengths", strength_values(spectrum.iter())),
            ],
        )
    } else {
        csv_doc(&params, "q,strength", strength_rows(spectrum.iter()))
    };
    write_file(&args.out.output, &content)?;

    if let Some(path) = &args.trace {
        let energies = dec.residual_energy_trace();
        let rates = dec.error_rate_trace();
        let content = if args.out.json {
            json_doc(
                &params,
                vec![
                    ("residual_energy", Value::Array(energies.iter().map(|&v| sig9(v).into()).collect())),
                    ("error_rate", Value::Array(rates.iter().map(|&v| sig9(v).into()).collect())),
                ],
            )
        } else {
            let rows = energies
                .iter()
                .zip(&rates)
                .enumerate()
                .map(|(i, (&e, &r))| format!("{i},{},{}", float9(e), float9(r)));
            csv_doc(&params, "iteration,residual_energy,error_rate", rows)
        };
        write_file(path, &content)?;
    }
    if let Some(path) = &args.residual {
        let residual = Signal { samples: dec.residual().to_vec(), sample_rate: signal.sample_rate };
        write_signal_file(&OutArgs { output: path.clone(), json: args.out.json }, &params, &residual)?;
    }
    if let Some(path) = &args.reconstruction {
        let recon = Signal { samples: dec.reconstruct(), sample_rate: signal.sample_rate };
        write_signal_file(&OutArgs { output: path.clone(), json: args.out.json }, &params, &recon)?;
    }
    Ok(())
}

fn run_track(args: TrackArgs) -> Result<(), CliError> {
    let signal = args.input.read()?;
    let hop = args.hop.unwrap_or((args.window / 4).max(1));
    let mut params = Params::new("track");
    args.input.describe(&mut params);
    params.push("max_period", args.max_period);
    params.push("window", args.window);
    params.push("hop", hop);
    params.push("window_iters", args.window_iters);
    describe_rate(&mut params, &signal);

    let window_params = WindowParams {
        max_period: args.max_period,
        window: args.window,
        hop,
        iterations: args.window_iters,
    };
    let plane = decompose_windows(&signal.samples, &window_params)?;
    let centers = plane.window_centers();

    let content = if args.out.json {
        let mut cells = Vec::new();
        for w in 0..plane.num_windows() {
            for q in 1..=args.max_period {
                let s = plane.strength(w, q);
                if s > 0.0 {
                    cells.push(json!({ "window": w, "q": q, "strength": sig9(s) }));
                }
            }
        }
        json_doc(
            &params,
            vec![
                (
                    "window_centers",
                    Value::Array(centers.iter().map(|&c| sig9(c).into()).collect()),
                ),
                ("cells", Value::Array(cells)),
            ],
        )
    } else {
        let mut rows = Vec::new();
        for w in 0..plane.num_windows() {
            for q in 1..=args.max_period {
                let s = plane.strength(w, q);
                if s > 0.0 {
                    rows.push(format!("{},{q},{}", float9(centers[w]), float9(s)));
                }
            }
        }
        csv_doc(&params, "window_center,q,strength", rows)
    };
    write_file(&args.out.output, &content)?;

    if let Some(path) = &args.dominant {
        let track = plane.dominant_track();
        let content = if args.out.json {
            let points: Vec<Value> = track
                .iter()
                .map(|p| {
                    json!({
                        "center": sig9(p.center),
                        "period": p.period,
                        "strength": sig9(p.strength),
                    })
                })
                .collect();
            json_doc(&params, vec![("track", Value::Array(points))])
        } else {
            let rows = track
                .iter()
                .map(|p| format!("{},{},{}", float9(p.center), p.period, float9(p.strength)));
            csv_doc(&params, "window_center,period,strength", rows)
        };
        write_file(path, &content)?;
    }
    Ok(())
}

fn run_baseline(args: BaselineArgs) -> Result<(), CliError> {
    let signal = args.input.read()?;
    let mut params = Params::new("baseline");
    args.input.describe(&mut params);
    params.push("max_period", args.max_period);
    describe_rate(&mut params, &signal);

    let spectrum = rft_spectrum(&signal.samples, args.max_period)?;
    let content = if args.out.json {
        json_doc(
            &params,
            vec![
                ("max_q", args.max_period.into()),
                ("strengths", strength_values(spectrum.iter())),
            ],
        )
    } else {
        csv_doc(&params, "q,strength", strength_rows(spectrum.iter()))
    };
    write_file(&args.out.output, &content)
}

fn describe_rate(params: &mut Params, signal: &Signal) {
    match signal.sample_rate {
        Some(rate) => params.push("sample_rate", rate),
        None => params.push("sample_rate", Value::Null),
    };
}

fn write_signal_file(out: &OutArgs, params: &Params, signal: &Signal) -> Result<(), CliError> {
    if signal.samples.is_empty() {
        return Err(CliError::Param("refusing to write an empty signal".into()));
    }
    let content = if out.json {
        json_doc(
            &params_with_rate(params, signal),
            vec![("samples", sample_values(&signal.samples))],
        )
    } else {
        csv_doc(&params_with_rate(params, signal), "sample", sample_rows(&signal.samples))
    };
    write_file(&out.output, &content)
}

fn params_with_rate(params: &Params, signal: &Signal) -> Params {
    let mut copy = params.clone();
    if !copy.has("sample_rate") {
        match signal.sample_rate {
            Some(rate) => copy.push("sample_rate", rate),
            None => copy.push("sample_rate", Value::Null),
        };
    }
    copy
}
