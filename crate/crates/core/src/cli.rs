// Copyright 2026 The mdqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `mdqft` command-line tool.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 degenerate input
//! (all-zero array), 4 failed verification or internal consistency check.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::encoding::{decode, decode_inverse, encode, ArrayLayout, MdArray, ScaleConvention};
use crate::error::Error;
use crate::experiment::{run_figure2, Figure2Report, DEFAULT_SEED, DEFAULT_SHOTS};
use crate::io::{format_array, format_histogram, read_array, write_text};
use crate::oracle::{compare_spectra, md_dft, DftEngine};
use crate::qft::{mdqft, mdqft_no_swap, predicted_gate_count};
use crate::sim::{apply_circuit, run_mdqft, sample, RunOptions};
use crate::circuit::GateCounts;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_CONSISTENCY: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "mdqft", version, about = "Multidimensional quantum Fourier transform simulator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Transform an array file and write the decoded spectrum.
    Transform {
        input: PathBuf,
        output: PathBuf,
        /// Build the circuit without terminal swaps and reorder classically.
        #[arg(long)]
        no_swap: bool,
        /// Output scale: classical, unitary or raw.
        #[arg(long, default_value = "classical")]
        convention: ScaleConvention,
        /// Apply the inverse transform (adjoint circuit) instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Transform an array file and sample measurement outcomes.
    Sample {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SHOTS)]
        shots: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Histogram file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_swap: bool,
    },
    /// Cross-check simulator, naive DFT and radix-2 FFT on an array file.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        abs_tol: f64,
        #[arg(long, default_value_t = 1e-9)]
        rel_tol: f64,
        /// Also compare against a spectrum stored in this array file.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Write the transform circuit for the given dimensions as OpenQASM 2.0.
    Export {
        #[arg(required = true, value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long)]
        no_swap: bool,
        /// QASM file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reproduce the 8x8 image example and write plot-ready tables.
    Figure2 {
        #[arg(long, default_value_t = DEFAULT_SHOTS)]
        shots: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(short, long)]
        output_dir: PathBuf,
    },
    /// Tabulate predicted and actual gate counts against classical FFT cost.
    Gatecount {
        /// One layout; without it a sweep over d = 1..4 at fixed M is printed.
        #[arg(value_delimiter = ',')]
        dims: Vec<usize>,
        /// log2(M) for the sweep.
        #[arg(long, default_value_t = 12)]
        sweep_qubits: usize,
    },
}

/// A failed command: exit code plus diagnostic.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Degenerate(_) => EXIT_DEGENERATE,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult = Result<(), CliError>;

fn emit(output: Option<&Path>, text: &str, out: &mut dyn Write) -> CliResult {
    match output {
        Some(path) => write_text(path, text)?,
        None => out.write_all(text.as_bytes()).map_err(|e| CliError {
            code: EXIT_INPUT,
            message: format!("cannot write output: {e}"),
        })?,
    }
    Ok(())
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Transform {
            input,
            output,
            no_swap,
            convention,
            inverse,
        } => cmd_transform(&input, &output, no_swap, convention, inverse),
        Command::Sample {
            input,
            shots,
            seed,
            output,
            no_swap,
        } => cmd_sample(&input, shots, seed, output.as_deref(), no_swap, out),
        Command::Verify {
            input,
            abs_tol,
            rel_tol,
            expected,
        } => cmd_verify(&input, abs_tol, rel_tol, expected.as_deref(), out),
        Command::Export {
            dims,
            no_swap,
            output,
        } => cmd_export(&dims, no_swap, output.as_deref(), out),
        Command::Figure2 {
            shots,
            seed,
            output_dir,
        } => cmd_figure2(shots, seed, &output_dir, out),
        Command::Gatecount { dims, sweep_qubits } => cmd_gatecount(&dims, sweep_qubits, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

pub fn cmd_transform(
    input: &Path,
    output: &Path,
    no_swap: bool,
    convention: ScaleConvention,
    inverse: bool,
) -> CliResult {
    let array = read_array(input)?;
    let layout = array.layout().clone();
    let result = if inverse {
        let (ordered, norm_factor) = encode(&array)?;
        let plan = if no_swap { mdqft_no_swap(&layout)? } else { mdqft(&layout)? };
        let mut state = plan.unorder_state(&ordered);
        apply_circuit(&mut state, &plan.circuit().adjoint())?;
        decode_inverse(&state, norm_factor, &layout, convention)?
    } else {
        let run = run_mdqft(&array, RunOptions { no_swap })?;
        decode(&run.ordered_state(), run.norm_factor, &layout, convention)?
    };
    write_text(output, &format_array(&result))?;
    Ok(())
}

pub fn cmd_sample(
    input: &Path,
    shots: u64,
    seed: u64,
    output: Option<&Path>,
    no_swap: bool,
    out: &mut dyn Write,
) -> CliResult {
    let array = read_array(input)?;
    let run = run_mdqft(&array, RunOptions { no_swap })?;
    let histogram = sample(&run.ordered_state(), shots, seed)?;
    let text = format_histogram(&histogram, array.layout())?;
    emit(output, &text, out)
}

pub fn cmd_verify(
    input: &Path,
    abs_tol: f64,
    rel_tol: f64,
    expected: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let array = read_array(input)?;
    let run = run_mdqft(&array, RunOptions::default())?;
    let quantum = decode(
        &run.ordered_state(),
        run.norm_factor,
        array.layout(),
        ScaleConvention::Classical,
    )?;
    let naive = md_dft(&array, DftEngine::Naive)?;
    let fft = md_dft(&array, DftEngine::Fft)?;

    let mut pairs: Vec<(&str, &MdArray, &MdArray)> = vec![
        ("simulator-vs-naive", &quantum, &naive),
        ("fft-vs-naive", &fft, &naive),
        ("simulator-vs-fft", &quantum, &fft),
    ];
    let stored;
    if let Some(path) = expected {
        stored = read_array(path)?;
        pairs.push(("naive-vs-expected", &naive, &stored));
    }

    let mut text = String::new();
    let mut all_pass = true;
    for (name, actual, reference) in pairs {
        let r = compare_spectra(actual, reference, abs_tol, rel_tol)?;
        all_pass &= r.pass;
        let _ = writeln!(
            text,
            "{name}: max_abs_err={:e} max_rel_err={:e} worst_index={} {}",
            r.max_abs_err,
            r.max_rel_err,
            r.worst_index,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    emit(None, &text, out)?;
    if all_pass {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_CONSISTENCY,
            message: format!("spectra disagree beyond abs {abs_tol:e} + rel {rel_tol:e}"),
        })
    }
}

pub fn cmd_export(dims: &[usize], no_swap: bool, output: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let layout = ArrayLayout::new(dims.to_vec())?;
    let plan = if no_swap { mdqft_no_swap(&layout)? } else { mdqft(&layout)? };
    emit(output, &plan.circuit().export_qasm(), out)
}

fn figure2_tables(report: &Figure2Report) -> Result<[(&'static str, String); 4], Error> {
    let layout = report.image.layout();
    let side = layout.dims()[0];

    let mut image = String::from("x,y,value\n");
    let mut spectrum = String::from("kx,ky,probability,classical_re,classical_im,classical_abs\n");
    for m in 0..layout.total_elements() {
        let (x, y) = (m % side, m / side);
        let _ = writeln!(image, "{x},{y},{:?}", report.image.data()[m].re);
        let c = report.classical_spectrum.data()[m];
        let _ = writeln!(
            spectrum,
            "{x},{y},{:?},{:?},{:?},{:?}",
            report.ideal_probabilities[m],
            c.re,
            c.im,
            c.norm()
        );
    }
    let histogram = format_histogram(&report.histogram, layout)?;
    let summary = json!({
        "shots": report.shots,
        "seed": report.seed,
        "peak_check": report.peak_check,
        "spectrum_check": {
            "max_abs_err": report.spectrum_check.max_abs_err,
            "max_rel_err": report.spectrum_check.max_rel_err,
            "pass": report.spectrum_check.pass,
        },
        "pass": report.pass(),
    });
    let summary = serde_json::to_string_pretty(&summary).expect("report serializes") + "\n";
    Ok([
        ("image.csv", image),
        ("ideal_spectrum.csv", spectrum),
        ("histogram.csv", histogram),
        ("report.json", summary),
    ])
}

pub fn cmd_figure2(shots: u64, seed: u64, output_dir: &Path, out: &mut dyn Write) -> CliResult {
    let report = run_figure2(shots, seed)?;
    std::fs::create_dir_all(output_dir)
        .map_err(|e| Error::Io(format!("cannot create {}: {e}", output_dir.display())))?;
    for (name, text) in figure2_tables(&report)? {
        write_text(&output_dir.join(name), &text)?;
    }
    let pc = &report.peak_check;
    let summary = format!(
        "shots={} seed={} peak_frequencies={:?} off_peak_counts={} spectrum_max_abs_err={:e} peak_check={}\n",
        report.shots,
        report.seed,
        pc.peak_frequencies,
        pc.off_peak_counts,
        report.spectrum_check.max_abs_err,
        if report.pass() { "PASS" } else { "FAIL" }
    );
    emit(None, &summary, out)?;
    if report.pass() {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_CONSISTENCY,
            message: "peak check failed".into(),
        })
    }
}

/// One line of the gate-count table.
#[derive(Debug, Clone, PartialEq)]
pub struct GatecountRow {
    pub dims: Vec<usize>,
    pub predicted: GateCounts,
    pub actual: GateCounts,
    /// Classical FFT operation estimate `M·log2(M)`.
    pub fft_ops: usize,
}

pub fn gatecount_row(dims: &[usize]) -> Result<GatecountRow, Error> {
    let layout = ArrayLayout::new(dims.to_vec())?;
    let q = layout.total_qubits();
    Ok(GatecountRow {
        dims: dims.to_vec(),
        predicted: predicted_gate_count(&layout),
        actual: mdqft(&layout)?.circuit().gate_count(),
        fft_ops: layout.total_elements() * q,
    })
}

/// Equal-extent layouts with `M = 2^qubits` for every `d ≤ 4` dividing `qubits`.
pub fn sweep_layouts(qubits: usize) -> Vec<Vec<usize>> {
    (1..=4)
        .filter(|d| qubits.is_multiple_of(*d) && qubits / d >= 1)
        .map(|d| vec![1usize << (qubits / d); d])
        .collect()
}

pub fn format_gatecount_table(rows: &[GatecountRow]) -> String {
    let mut text = format!(
        "{:<16} {:>2} {:>10} {:>4} {:>5} {:>5} {:>9} {:>9} {:>12}\n",
        "dims", "d", "M", "H", "CP", "SWAP", "predicted", "actual", "fft_M_log2M"
    );
    for row in rows {
        let dims: Vec<String> = row.dims.iter().map(usize::to_string).collect();
        let m: usize = row.dims.iter().product();
        let _ = writeln!(
            text,
            "{:<16} {:>2} {:>10} {:>4} {:>5} {:>5} {:>9} {:>9} {:>12}",
            dims.join("x"),
            row.dims.len(),
            m,
            row.actual.h,
            row.actual.controlled_phase,
            row.actual.swap,
            row.predicted.total(),
            row.actual.total(),
            row.fft_ops
        );
    }
    text
}

/// Fails with exit code 4 if any row's predicted counts differ from the circuit's.
pub fn check_gatecount_rows(rows: &[GatecountRow]) -> CliResult {
    match rows.iter().find(|r| r.predicted != r.actual) {
        None => Ok(()),
        Some(r) => Err(CliError {
            code: EXIT_CONSISTENCY,
            message: format!(
                "predicted {:?} but built {:?} for dims {:?}",
                r.predicted, r.actual, r.dims
            ),
        }),
    }
}

pub fn cmd_gatecount(dims: &[usize], sweep_qubits: usize, out: &mut dyn Write) -> CliResult {
    let layouts = if dims.is_empty() {
        if sweep_qubits == 0 {
            return Err(Error::Validation("sweep needs at least one qubit".into()).into());
        }
        sweep_layouts(sweep_qubits)
    } else {
        vec![dims.to_vec()]
    };
    let rows = layouts
        .iter()
        .map(|d| gatecount_row(d))
        .collect::<Result<Vec<_>, _>>()?;
    emit(None, &format_gatecount_table(&rows), out)?;
    check_gatecount_rows(&rows)
}
