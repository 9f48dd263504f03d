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

//! Noiseless reproduction of the 8×8 two-dimensional example:
//! `f(x, y) = sin(πx/2)·cos(πy/2)` on `x, y ∈ {0..7}`, loaded by a seven-gate
//! product-state circuit, transformed by the swap-free 2D QFT and sampled.
//!
//! `x` is dimension 1 (qubits 0-2, qubit 0 least significant) and `y` is
//! dimension 2 (qubits 3-5).

use num_complex::Complex64;
use serde::Serialize;

use crate::circuit::{Circuit, Gate};
use crate::encoding::{decode, encode, ArrayLayout, MdArray, ScaleConvention};
use crate::error::Result;
use crate::oracle::{compare_spectra, md_dft, DftEngine, SpectrumReport};
use crate::qft::mdqft_no_swap;
use crate::sim::{apply_circuit, probabilities, sample, SampleHistogram};
use crate::state::{zero_state, Statevector};

pub const IMAGE_SIDE: usize = 8;
pub const DEFAULT_SHOTS: u64 = 1 << 14;
pub const DEFAULT_SEED: u64 = 7;

/// Spectral coordinates of the four expected peaks.
pub const PEAK_COORDS: [(usize, usize); 4] = [(2, 2), (6, 2), (2, 6), (6, 6)];

pub const IDEAL_PEAK_PROBABILITY: f64 = 0.25;
pub const IDEAL_TOLERANCE: f64 = 1e-12;
/// Allowed deviation of an empirical peak frequency at 2^14 shots
/// (binomial σ ≈ 0.0034).
pub const FREQUENCY_TOLERANCE: f64 = 0.015;
pub const SPECTRUM_TOLERANCE: f64 = 1e-10;

// sin and cos at integer multiples of π/2, exactly.
fn sin_quarter_turns(k: usize) -> f64 {
    [0.0, 1.0, 0.0, -1.0][k % 4]
}

fn cos_quarter_turns(k: usize) -> f64 {
    [1.0, 0.0, -1.0, 0.0][k % 4]
}

pub fn image_layout() -> ArrayLayout {
    ArrayLayout::new(vec![IMAGE_SIDE, IMAGE_SIDE]).expect("8x8 layout is valid")
}

/// The 8×8 input image, indexed `(x, y)`.
pub fn example_image() -> MdArray {
    MdArray::from_fn(image_layout(), |k| {
        Complex64::new(sin_quarter_turns(k[0]) * cos_quarter_turns(k[1]), 0.0)
    })
    .expect("image values are finite")
}

/// Seven-gate preparation of the normalized image:
/// `x₀ = 1`, `x₁ ∈ |−⟩`, `x₂ ∈ |+⟩`, `y₀ = 0`, `y₁ ∈ |−⟩`, `y₂ ∈ |+⟩`.
pub fn example_init_circuit() -> Circuit {
    Circuit::from_gates(
        6,
        [
            Gate::x(0),
            Gate::x(1),
            Gate::h(2),
            Gate::x(4),
            Gate::h(5),
            Gate::h(1),
            Gate::h(4),
        ],
    )
    .expect("gates fit in 6 qubits")
}

/// Flat outcome indices of the four peaks.
pub fn peak_indices() -> [usize; 4] {
    PEAK_COORDS.map(|(kx, ky)| kx + IMAGE_SIDE * ky)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeakCheck {
    pub peak_indices: [usize; 4],
    pub ideal_peak_probabilities: [f64; 4],
    pub max_ideal_off_peak: f64,
    pub peak_frequencies: [f64; 4],
    pub min_peak_frequency: f64,
    pub max_off_peak_frequency: f64,
    pub off_peak_counts: u64,
    /// Ideal peaks at 0.25 and zero elsewhere, both within 1e-12.
    pub ideal_ok: bool,
    /// Every empirical peak frequency within 0.25 ± 0.015.
    pub frequencies_ok: bool,
    /// Lowest peak frequency strictly above the highest off-peak frequency.
    pub separated: bool,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Figure2Report {
    pub shots: u64,
    pub seed: u64,
    pub image: MdArray,
    /// Output state after the swap-free circuit, reordered into transform order.
    pub state: Statevector,
    pub ideal_probabilities: Vec<f64>,
    pub histogram: SampleHistogram,
    pub classical_spectrum: MdArray,
    pub quantum_spectrum: MdArray,
    pub spectrum_check: SpectrumReport,
    pub peak_check: PeakCheck,
}

impl Figure2Report {
    pub fn pass(&self) -> bool {
        self.peak_check.pass && self.spectrum_check.pass
    }
}

fn check_peaks(probs: &[f64], histogram: &SampleHistogram) -> PeakCheck {
    let peaks = peak_indices();
    let ideal_peak_probabilities = peaks.map(|i| probs[i]);
    let max_ideal_off_peak = probs
        .iter()
        .enumerate()
        .filter(|(i, _)| !peaks.contains(i))
        .map(|(_, p)| *p)
        .fold(0.0, f64::max);
    let peak_frequencies = peaks.map(|i| histogram.frequency(i));
    let min_peak_frequency = peak_frequencies.iter().copied().fold(f64::INFINITY, f64::min);
    let (off_peak_counts, max_off_peak_count) = histogram
        .counts()
        .iter()
        .filter(|(i, _)| !peaks.contains(i))
        .fold((0, 0), |(sum, max), (_, &c)| (sum + c, u64::max(max, c)));
    let max_off_peak_frequency = max_off_peak_count as f64 / histogram.shots() as f64;

    let ideal_ok = ideal_peak_probabilities
        .iter()
        .all(|p| (p - IDEAL_PEAK_PROBABILITY).abs() <= IDEAL_TOLERANCE)
        && max_ideal_off_peak <= IDEAL_TOLERANCE;
    let frequencies_ok = peak_frequencies
        .iter()
        .all(|f| (f - IDEAL_PEAK_PROBABILITY).abs() <= FREQUENCY_TOLERANCE);
    let separated = min_peak_frequency > max_off_peak_frequency;
    PeakCheck {
        peak_indices: peaks,
        ideal_peak_probabilities,
        max_ideal_off_peak,
        peak_frequencies,
        min_peak_frequency,
        max_off_peak_frequency,
        off_peak_counts,
        ideal_ok,
        frequencies_ok,
        separated,
        pass: ideal_ok && frequencies_ok && separated,
    }
}

/// Runs preparation, the swap-free 2D QFT with classical bit-order
/// correction, and `shots` samples; checks against the classical transform.
pub fn run_figure2(shots: u64, seed: u64) -> Result<Figure2Report> {
    let image = example_image();
    let layout = image.layout().clone();
    let plan = mdqft_no_swap(&layout)?;

    let mut raw = zero_state(layout.total_qubits())?;
    apply_circuit(&mut raw, &example_init_circuit())?;
    apply_circuit(&mut raw, plan.circuit())?;
    let state = plan.reorder_state(&raw);

    let ideal_probabilities = probabilities(&state);
    let histogram = sample(&state, shots, seed)?;

    let (_, norm_factor) = encode(&image)?;
    let quantum_spectrum = decode(&state, norm_factor, &layout, ScaleConvention::Classical)?;
    let classical_spectrum = md_dft(&image, DftEngine::Fft)?;
    let spectrum_check = compare_spectra(&quantum_spectrum, &classical_spectrum, SPECTRUM_TOLERANCE, 0.0)?;
    let peak_check = check_peaks(&ideal_probabilities, &histogram);

    Ok(Figure2Report {
        shots,
        seed,
        image,
        state,
        ideal_probabilities,
        histogram,
        classical_spectrum,
        quantum_spectrum,
        spectrum_check,
        peak_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn image_entries() {
        let img = example_image();
        assert_eq!(img.get(&[1, 0]).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(img.get(&[0, 0]).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(img.get(&[3, 2]).unwrap(), Complex64::new(1.0, 0.0));
        let nonzero: Vec<f64> = img.data().iter().filter(|v| v.norm() != 0.0).map(|v| v.re).collect();
        assert_eq!(nonzero.len(), 16);
        assert!(nonzero.iter().all(|v| v.abs() == 1.0));
    }

    #[test]
    fn image_matches_trig_definition() {
        use std::f64::consts::PI;
        let img = example_image();
        for x in 0..8 {
            for y in 0..8 {
                let f = (PI * x as f64 / 2.0).sin() * (PI * y as f64 / 2.0).cos();
                assert!((img.get(&[x, y]).unwrap().re - f).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn init_circuit_prepares_encoded_image() {
        let mut s = zero_state(6).unwrap();
        apply_circuit(&mut s, &example_init_circuit()).unwrap();
        let (expected, factor) = encode(&example_image()).unwrap();
        assert_eq!(factor, 4.0);
        assert!(s.max_abs_diff(&expected) <= 1e-15);
        assert!((s.norm() - 1.0).abs() < 1e-15);
        let counts = example_init_circuit().gate_count();
        assert_eq!((counts.h, counts.x, counts.total()), (4, 3, 7));
    }

    #[test]
    fn figure2_defaults() {
        let r = run_figure2(DEFAULT_SHOTS, DEFAULT_SEED).unwrap();
        assert!(r.pass(), "{:?}", r.peak_check);
        assert_eq!(r.histogram.shots(), 1 << 14);
        assert_eq!(r.peak_check.off_peak_counts, 0);
        for &i in &peak_indices() {
            assert!((r.classical_spectrum.data()[i].norm() - 16.0).abs() < 1e-12);
        }
    }

    #[test]
    fn figure2_single_shot_lands_on_a_peak() {
        let r = run_figure2(1, 99).unwrap();
        assert_eq!(r.histogram.counts().len(), 1);
        let (&outcome, &count) = r.histogram.counts().iter().next().unwrap();
        assert_eq!(count, 1);
        assert!(peak_indices().contains(&outcome));
    }

    #[test]
    fn figure2_seed_changes_histogram_not_verdict() {
        let a = run_figure2(DEFAULT_SHOTS, 1).unwrap();
        let b = run_figure2(DEFAULT_SHOTS, 2).unwrap();
        assert_ne!(a.histogram, b.histogram);
        assert!(a.pass() && b.pass());
    }
}
