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

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Environment variable overriding the default qubit cap.
pub const MAX_QUBITS_ENV: &str = "MDQFT_MAX_QUBITS";

pub const DEFAULT_MAX_QUBITS: usize = 26;

/// Hard ceiling regardless of the environment; 2^30 amplitudes is 16 GiB.
const ABSOLUTE_MAX_QUBITS: usize = 30;

/// Largest statevector this process will allocate, in qubits.
///
/// Reads `MDQFT_MAX_QUBITS` on every call; unparsable or out-of-range values
/// fall back to [`DEFAULT_MAX_QUBITS`].
pub fn max_qubits() -> usize {
    std::env::var(MAX_QUBITS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| (1..=ABSOLUTE_MAX_QUBITS).contains(&n))
        .unwrap_or(DEFAULT_MAX_QUBITS)
}

pub(crate) fn check_qubit_capacity(num_qubits: usize) -> Result<()> {
    let cap = max_qubits();
    if num_qubits == 0 || num_qubits > cap {
        return Err(Error::Capacity(format!(
            "qubit count {num_qubits} outside 1..={cap}"
        )));
    }
    Ok(())
}

/// Dense vector of `2^num_qubits` complex amplitudes.
///
/// States produced by this crate (from [`zero_state`], encoding and gate
/// application) have unit norm to within 1e-10. [`Statevector::from_amplitudes`]
/// only checks shape and finiteness, so callers can also wrap unnormalized
/// vectors for inspection.
#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Validation(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_qubit_capacity(num_qubits)?;
        if let Some(i) = amplitudes.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Validation(format!("amplitude {i} is not finite")));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// Largest elementwise modulus of the difference to `other`.
    pub fn max_abs_diff(&self, other: &Statevector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `|0…0⟩` on `num_qubits` qubits.
pub fn zero_state(num_qubits: usize) -> Result<Statevector> {
    check_qubit_capacity(num_qubits)?;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
    amplitudes[0] = Complex64::new(1.0, 0.0);
    Ok(Statevector {
        num_qubits,
        amplitudes,
    })
}

/// Euclidean norm `√(Σ|aₖ|²)`.
pub fn norm(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}
