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

//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use mdqft::dense::{dense_unitary_of_circuit, kron, DenseMatrix};
use mdqft::encoding::register_map;
use mdqft::experiment::{example_image, example_init_circuit, peak_indices, run_figure2, DEFAULT_SEED};
use mdqft::io::format_array;
use mdqft::oracle::{dft_1d_naive, fft_radix2, vandermonde};
use mdqft::qft::{batched_mdqft, mdqft_in_order, mdqft_no_swap, qft_register};
use mdqft::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PROPERTY_CASES: usize = 200;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn random_array(rng: &mut ChaCha8Rng, layout: ArrayLayout) -> MdArray {
    let data = (0..layout.total_elements()).map(|_| random_complex(rng)).collect();
    MdArray::new(layout, data).unwrap()
}

/// Layout with `d ≤ max_d`, register widths `≤ max_width` and `≤ max_qubits` total.
fn random_layout(rng: &mut ChaCha8Rng, max_d: usize, max_width: usize, max_qubits: usize) -> ArrayLayout {
    loop {
        let d = rng.gen_range(1..=max_d);
        let widths: Vec<usize> = (0..d).map(|_| rng.gen_range(1..=max_width)).collect();
        if widths.iter().sum::<usize>() <= max_qubits {
            return ArrayLayout::new(widths.iter().map(|&w| 1usize << w).collect::<Vec<_>>()).unwrap();
        }
    }
}

fn random_state(rng: &mut ChaCha8Rng, num_qubits: usize) -> Statevector {
    let v: Vec<Complex64> = (0..1usize << num_qubits).map(|_| random_complex(rng)).collect();
    let n = norm(&v);
    Statevector::from_amplitudes(v.iter().map(|a| a / n).collect()).unwrap()
}

fn random_gate(rng: &mut ChaCha8Rng, n: usize) -> Gate {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    let theta = rng.gen_range(-7.0..7.0);
    match rng.gen_range(0..5) {
        0 => Gate::h(a),
        1 => Gate::x(a),
        2 => Gate::phase(a, theta),
        3 => Gate::cphase(a, b, theta),
        _ => Gate::swap(a, b),
    }
}

fn qft_matrix(n: usize) -> DenseMatrix {
    vandermonde(n).unwrap().scale(1.0 / (n as f64).sqrt())
}

/// 1. Simulator spectrum vs md_dft on 100 random arrays.
fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut failures = 0;
    for _ in 0..100 {
        let layout = random_layout(&mut rng, 3, 3, 12);
        let array = random_array(&mut rng, layout);
        let run = run_mdqft(&array, RunOptions::default()).unwrap();
        let quantum = decode(&run.state, run.norm_factor, array.layout(), ScaleConvention::Classical).unwrap();
        let reference = md_dft(&array, DftEngine::Naive).unwrap();
        let report = compare_spectra(&quantum, &reference, 1e-9, 1e-9).unwrap();
        worst = worst.max(report.max_abs_err);
        failures += usize::from(!report.pass);
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && elapsed < Duration::from_secs(30),
        format!("100 arrays, {failures} failures, max abs err {worst:.2e}, {elapsed:.2?} (< 30 s)"),
    )
}

/// 2. Noiseless image example.
fn figure2_reproduction() -> Outcome {
    let report = run_figure2(1 << 14, DEFAULT_SEED).unwrap();
    let peaks = peak_indices();
    let ideal = &report.ideal_probabilities;
    let support: Vec<usize> = (0..ideal.len()).filter(|&i| ideal[i] > 1e-12).collect();
    let ideal_ok = support == peaks && peaks.iter().all(|&i| (ideal[i] - 0.25).abs() <= 1e-12);
    let freqs = peaks.map(|i| report.histogram.frequency(i));
    let freq_ok = freqs.iter().all(|f| (f - 0.25).abs() <= 0.015);
    let off_peak: u64 = report
        .histogram
        .counts()
        .iter()
        .filter(|(i, _)| !peaks.contains(i))
        .map(|(_, c)| c)
        .sum();
    outcome(
        ideal_ok && freq_ok && off_peak == 0,
        format!("support {support:?}, shot frequencies {freqs:?}, off-peak counts {off_peak}"),
    )
}

/// 3. Seven-gate preparation equals the encoded image.
fn initialization() -> Outcome {
    let mut state = zero_state(6).unwrap();
    apply_circuit(&mut state, &example_init_circuit()).unwrap();
    let (expected, _) = encode(&example_image()).unwrap();
    let diff = state.max_abs_diff(&expected);
    let counts = example_init_circuit().gate_count();
    outcome(
        diff <= 1e-15 && counts.h == 4 && counts.x == 3 && counts.total() == 7,
        format!("max diff {diff:.1e}, {} H + {} X", counts.h, counts.x),
    )
}

/// 4. Gate counts: prediction vs circuit, and the fixed-M sweep.
fn complexity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut layouts: Vec<ArrayLayout> = (0..PROPERTY_CASES).map(|_| random_layout(&mut rng, 5, 8, 24)).collect();
    let sweep: Vec<ArrayLayout> = (1..=4).map(|d| ArrayLayout::new(vec![1usize << (12 / d); d]).unwrap()).collect();
    layouts.extend(sweep.iter().cloned());
    let mismatches = layouts
        .iter()
        .filter(|l| predicted_gate_count(l) != mdqft(l).unwrap().circuit().gate_count())
        .count();
    let cp: Vec<usize> = sweep.iter().map(|l| mdqft(l).unwrap().circuit().gate_count().controlled_phase).collect();
    let fft_ops: Vec<usize> = sweep.iter().map(|l| l.total_elements() * l.total_qubits()).collect();
    outcome(
        mismatches == 0 && cp == [66, 30, 18, 12] && fft_ops.iter().all(|&f| f == 49152),
        format!(
            "{} layouts, {mismatches} mismatches; M=4096 CP by d=1..4 {cp:?} vs FFT M·log2(M) = {}",
            layouts.len(),
            fft_ops[0]
        ),
    )
}

/// 5. Randomized property suites, each with at least 200 cases.
fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let start = Instant::now();
    let mut worst = [0.0f64; 8];

    // Norm preservation per gate and unitarity of built circuits.
    for _ in 0..PROPERTY_CASES {
        let n = rng.gen_range(2..=8);
        let mut state = random_state(&mut rng, n);
        for _ in 0..20 {
            let before = state.norm();
            apply_gate(&mut state, &random_gate(&mut rng, n)).unwrap();
            worst[0] = worst[0].max((state.norm() - before).abs());
        }
        let layout = random_layout(&mut rng, 3, 4, 8);
        let u = dense_unitary_of_circuit(mdqft(&layout).unwrap().circuit(), layout.total_qubits()).unwrap();
        worst[0] = worst[0].max(u.unitarity_error().unwrap());
    }
    // Register-order invariance, swap elision, adjoint round trip.
    for _ in 0..PROPERTY_CASES {
        let layout = random_layout(&mut rng, 4, 4, 12);
        let array = random_array(&mut rng, layout.clone());
        let (input, _) = encode(&array).unwrap();

        let mut reference = input.clone();
        apply_circuit(&mut reference, mdqft(&layout).unwrap().circuit()).unwrap();
        let mut order: Vec<usize> = (0..layout.ndim()).collect();
        order.shuffle(&mut rng);
        let mut permuted = input.clone();
        apply_circuit(&mut permuted, mdqft_in_order(&layout, &order).unwrap().circuit()).unwrap();
        worst[1] = worst[1].max(permuted.max_abs_diff(&reference));

        let plan = mdqft_no_swap(&layout).unwrap();
        let mut raw = input.clone();
        apply_circuit(&mut raw, plan.circuit()).unwrap();
        worst[2] = worst[2].max(plan.reorder_state(&raw).max_abs_diff(&reference));

        let mut back = reference.clone();
        apply_circuit(&mut back, &mdqft(&layout).unwrap().circuit().adjoint()).unwrap();
        worst[3] = worst[3].max(back.max_abs_diff(&input));
    }
    // Dense tensor structure of every block at ≤ 10 qubits.
    for _ in 0..PROPERTY_CASES {
        let layout = random_layout(&mut rng, 4, 5, 10);
        let map = register_map(&layout);
        let q = layout.total_qubits();
        for i in 0..layout.ndim() {
            let u = dense_unitary_of_circuit(&qft_register(q, map.span(i)).unwrap(), q).unwrap();
            let inner = kron(&qft_matrix(layout.dims()[i]), &DenseMatrix::identity(layout.extent_below(i)).unwrap()).unwrap();
            let expected = kron(&DenseMatrix::identity(layout.extent_above(i)).unwrap(), &inner).unwrap();
            worst[4] = worst[4].max(u.max_abs_diff(&expected));
        }
    }
    // Batched block-diagonal structure for b ≤ 2.
    for _ in 0..PROPERTY_CASES {
        let layout = random_layout(&mut rng, 3, 3, 6);
        let b = rng.gen_range(0..=2);
        let q = layout.total_qubits();
        let u = dense_unitary_of_circuit(batched_mdqft(&layout, b).unwrap().circuit(), q + b).unwrap();
        let single = dense_unitary_of_circuit(mdqft(&layout).unwrap().circuit(), q).unwrap();
        let expected = kron(&DenseMatrix::identity(1 << b).unwrap(), &single).unwrap();
        worst[5] = worst[5].max(u.max_abs_diff(&expected));
    }
    // Parseval on the oracle.
    for _ in 0..PROPERTY_CASES {
        let layout = random_layout(&mut rng, 3, 4, 12);
        let array = random_array(&mut rng, layout);
        let spectrum = md_dft(&array, DftEngine::Fft).unwrap();
        let lhs = norm(spectrum.data()).powi(2);
        let rhs = array.layout().total_elements() as f64 * norm(array.data()).powi(2);
        worst[6] = worst[6].max((lhs - rhs).abs() / rhs);
    }
    // Radix-2 FFT vs naive DFT up to N = 4096; the first 13 cases cover every size.
    for case in 0..PROPERTY_CASES {
        let log_n = if case <= 12 { case } else { rng.gen_range(0..=12) };
        let x: Vec<Complex64> = (0..1usize << log_n).map(|_| random_complex(&mut rng)).collect();
        let naive = dft_1d_naive(&x).unwrap();
        let fast = fft_radix2(&x).unwrap();
        let err = fast.iter().zip(&naive).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        worst[7] = worst[7].max(err);
    }

    let limits = [1e-12, 1e-12, 1e-13, 1e-12, 1e-12, 1e-12, 1e-8, 1e-10];
    let names = ["norm/unitarity", "order", "swap-elision", "adjoint", "tensor", "batched", "parseval-rel", "fft"];
    let elapsed = start.elapsed();
    let pass = worst.iter().zip(&limits).all(|(w, l)| w <= l) && elapsed < Duration::from_secs(60);
    let detail: Vec<String> = names
        .iter()
        .zip(worst.iter().zip(&limits))
        .map(|(n, (w, l))| format!("{n} {w:.1e}<={l:.0e}"))
        .collect();
    outcome(pass, format!("{} cases each; {}; {elapsed:.2?} (< 60 s)", PROPERTY_CASES, detail.join(", ")))
}

fn run_bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mdqft")).args(args).output().unwrap()
}

/// 6. Byte-identical exports and sample histograms.
fn determinism() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut ok = true;
    let mut notes = Vec::new();
    for (flag, name) in [(None, "mdqft_8x8.qasm"), (Some("--no-swap"), "mdqft_8x8_no_swap.qasm")] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{run}-{name}"));
            let mut args = vec!["export", "8,8", "-o", path.to_str().unwrap()];
            args.extend(flag);
            ok &= run_bin(&args).status.success();
            outputs.push(std::fs::read(&path).unwrap_or_default());
        }
        let same = outputs[0] == outputs[1] && outputs[0] == std::fs::read(golden.join(name)).unwrap();
        ok &= same;
        notes.push(format!("{name} {}", if same { "identical" } else { "differs" }));
    }
    let input = dir.path().join("image.json");
    std::fs::write(&input, format_array(&example_image())).unwrap();
    let samples: Vec<Vec<u8>> = (0..2)
        .map(|_| run_bin(&["sample", input.to_str().unwrap(), "--shots", "16384", "--seed", "7"]).stdout)
        .collect();
    let same = !samples[0].is_empty() && samples[0] == samples[1];
    ok &= same;
    notes.push(format!("sample seed 7 {}", if same { "identical" } else { "differs" }));
    outcome(ok, notes.join(", "))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 6] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 image example (noiseless)", figure2_reproduction),
        ("3 initialization circuit", initialization),
        ("4 gate-count complexity", complexity),
        ("5 property suites", property_suites),
        ("6 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = check();
        failed += usize::from(!result.pass);
        println!("[{}] {name}: {}", if result.pass { "PASS" } else { "FAIL" }, result.detail);
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
