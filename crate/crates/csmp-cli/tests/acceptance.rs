//! Acceptance criterion 11: with a fixed configuration and seed, repeated
//! runs of every command produce byte-identical output files. Criteria 1
//! through 10 live in the csmp crate's acceptance suite; this one needs
//! the binary.

mod common;

use common::{run_ok, wav_bytes};
use std::path::{Path, PathBuf};

fn path_str(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

/// Runs the command twice against the same output paths and returns the
/// labeled byte images of both passes.
fn two_passes(args: &[&str], outputs: &[&str]) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let collect = |label: &str| -> Vec<Vec<u8>> {
        outputs
            .iter()
            .map(|p| {
                std::fs::read(p).unwrap_or_else(|e| panic!("{label}: cannot read {p}: {e}"))
            })
            .collect()
    };
    run_ok(args);
    let first = collect("first pass");
    for p in outputs {
        std::fs::remove_file(p).unwrap();
    }
    run_ok(args);
    (first, collect("second pass"))
}

#[test]
fn repeated_runs_write_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path();

    let cosines = path_str(base, "cosines.csv");
    run_ok(&["synth", "cosines", "--periods", "5,12,25", "--length", "300", "-o", &cosines]);
    let wav: PathBuf = base.join("input.wav");
    let square: Vec<i16> = (0..200).map(|n| if n % 10 < 5 { 12000 } else { -12000 }).collect();
    std::fs::write(&wav, wav_bytes(8000, &square)).unwrap();
    let wav = wav.to_string_lossy().into_owned();

    let spectrum_csv = path_str(base, "spectrum.csv");
    let spectrum_json = path_str(base, "spectrum.json");
    let dec_csv = path_str(base, "dec.csv");
    let dec_json = path_str(base, "dec.json");
    let trace = path_str(base, "trace.csv");
    let residual = path_str(base, "residual.csv");
    let reconstruction = path_str(base, "reconstruction.csv");
    let plane_csv = path_str(base, "plane.csv");
    let plane_json = path_str(base, "plane.json");
    let dominant = path_str(base, "dominant.csv");
    let rft_csv = path_str(base, "rft.csv");
    let rft_json = path_str(base, "rft.json");
    let synth_cos = path_str(base, "synth_cos.csv");
    let synth_cos_json = path_str(base, "synth_cos.json");
    let synth_chirp = path_str(base, "synth_chirp.csv");
    let synth_noise = path_str(base, "synth_noise.csv");
    let synth_noise_json = path_str(base, "synth_noise.json");

    let cases: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (
            vec!["synth", "cosines", "--periods", "7,10", "--length", "140", "-o", &synth_cos],
            vec![&synth_cos],
        ),
        (
            vec![
                "synth", "cosines", "--periods", "7,10", "--length", "140", "-o",
                &synth_cos_json, "--json",
            ],
            vec![&synth_cos_json],
        ),
        (
            vec![
                "synth", "chirp", "--rate", "0.0015915494", "--start", "2", "--end", "4",
                "--step", "0.01", "-o", &synth_chirp,
            ],
            vec![&synth_chirp],
        ),
        (
            vec!["synth", "noise", "--length", "256", "--seed", "11", "-o", &synth_noise],
            vec![&synth_noise],
        ),
        (
            vec![
                "synth", "noise", "--length", "256", "--seed", "11", "-o", &synth_noise_json,
                "--json",
            ],
            vec![&synth_noise_json],
        ),
        (
            vec!["spectrum", "--input", &cosines, "-Q", "30", "-o", &spectrum_csv],
            vec![&spectrum_csv],
        ),
        (
            vec!["spectrum", "--input", &wav, "--format", "wav", "-Q", "20", "-o", &spectrum_json, "--json"],
            vec![&spectrum_json],
        ),
        (
            vec![
                "decompose", "--input", &cosines, "-Q", "30", "-L", "12", "-o", &dec_csv,
                "--trace", &trace, "--residual", &residual, "--reconstruction", &reconstruction,
            ],
            vec![&dec_csv, &trace, &residual, &reconstruction],
        ),
        (
            vec!["decompose", "--input", &cosines, "-Q", "30", "-L", "12", "-o", &dec_json, "--json"],
            vec![&dec_json],
        ),
        (
            vec![
                "track", "--input", &cosines, "-Q", "30", "-W", "90", "-H", "30",
                "--window-iters", "6", "-o", &plane_csv, "--dominant", &dominant,
            ],
            vec![&plane_csv, &dominant],
        ),
        (
            vec!["track", "--input", &cosines, "-Q", "30", "-W", "90", "-o", &plane_json, "--json"],
            vec![&plane_json],
        ),
        (
            vec!["baseline", "--input", &cosines, "-Q", "30", "-o", &rft_csv],
            vec![&rft_csv],
        ),
        (
            vec!["baseline", "--input", &wav, "--format", "wav", "-Q", "20", "-o", &rft_json, "--json"],
            vec![&rft_json],
        ),
    ];

    let mut checked_files = 0usize;
    for (args, outputs) in &cases {
        let (first, second) = two_passes(args, outputs);
        for (i, (a, b)) in first.iter().zip(&second).enumerate() {
            assert_eq!(
                a, b,
                "bytes differ between runs of {:?} for output {}",
                args, outputs[i]
            );
            checked_files += 1;
        }
    }

    println!(
        "criterion 11: PASS ({} commands re-run with fixed configs, all {} output files \
         byte-identical)",
        cases.len(),
        checked_files
    );
}
