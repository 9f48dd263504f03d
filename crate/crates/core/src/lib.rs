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

//! Statevector simulation of the multidimensional quantum Fourier transform.
//!
//! A d-dimensional array with power-of-two extents is amplitude-encoded into
//! `Σ nᵢ` qubits (dimension 1 on the lowest-indexed qubits), and one textbook
//! QFT per dimension register transforms it along every axis at once. The
//! [`oracle`] module carries an independent classical row-column DFT so every
//! simulated spectrum can be checked against the unnormalized transform
//!
//! ```text
//! â[δ₁..δ_d] = Σ_{k_d} ω_{N_d}^{k_d δ_d} … Σ_{k₁} ω_{N₁}^{k₁ δ₁} a[k₁..k_d],   ω_N = e^{+2πi/N}
//! ```
//!
//! Note the positive exponent: third-party FFT libraries that use `e^{-2πi/N}`
//! for the forward pass produce the complex conjugate of these spectra for
//! real input.
//!
//! Qubit 0 is the least significant bit of every outcome index.

pub mod circuit;
pub mod cli;
pub mod dense;
pub mod encoding;
pub mod error;
pub mod experiment;
pub mod io;
pub mod oracle;
pub mod qft;
pub mod sim;
pub mod state;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;

pub use circuit::{Circuit, Gate, GateCounts};
pub use dense::{dense_unitary_of_circuit, kron, DenseMatrix};
pub use encoding::{
    decode, decode_inverse, encode, register_map, ArrayLayout, MdArray, RegisterMap, ScaleConvention,
};
pub use error::{Error, Result};
pub use oracle::{compare_spectra, md_dft, DftEngine, SpectrumReport};

pub use qft::{batched_mdqft, mdqft, mdqft_no_swap, predicted_gate_count, qft_register, QftPlan};
pub use sim::{apply_circuit, apply_gate, probabilities, run_mdqft, sample, MdqftRun, RunOptions, SampleHistogram};
pub use state::{max_qubits, norm, zero_state, Statevector};

pub use num_complex::Complex64;
