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

//! Small dense complex matrices for checking tensor-product structure.
//!
//! These are a verification facility only: dimensions are capped at
//! 2^12 × 2^12 and the simulator never builds them.

use num_complex::Complex64;

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::sim::apply_circuit;
use crate::state::Statevector;

pub const MAX_DENSE_DIM: usize = 1 << 12;
pub const MAX_DENSE_QUBITS: usize = 12;

/// Row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DENSE_DIM || cols > MAX_DENSE_DIM {
        return Err(Error::Capacity(format!(
            "dense matrix {rows}x{cols} exceeds {MAX_DENSE_DIM}x{MAX_DENSE_DIM}"
        )));
    }
    Ok(())
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Result<Self> {
        check_dims(rows, cols)?;
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_dims(rows, cols)?;
        if entries.len() != rows * cols {
            return Err(Error::Validation(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.cols + c]
    }

    pub fn scale(&self, factor: f64) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> DenseMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).conj());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn matmul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Validation(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols)?;
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.entries[k * rhs.cols..(k + 1) * rhs.cols];
                let dst = &mut out.entries[r * rhs.cols..(r + 1) * rhs.cols];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.cols {
            return Err(Error::Validation(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.entries[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `max |self[i,j] − other[i,j]|`, or infinity on a shape mismatch.
    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `‖U†U − I‖_max`.
    pub fn unitarity_error(&self) -> Result<f64> {
        let product = self.adjoint().matmul(self)?;
        Ok(product.max_abs_diff(&DenseMatrix::identity(self.cols)?))
    }
}

/// Kronecker product: `(A⊗B)[i·rb + k, j·cb + l] = A[i,j]·B[k,l]`.
pub fn kron(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix> {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    check_dims(rows, cols)?;
    let mut entries = vec![Complex64::new(0.0, 0.0); rows * cols];
    for i in 0..a.rows {
        for j in 0..a.cols {
            let aij = a.get(i, j);
            for k in 0..b.rows {
                let base = (i * b.rows + k) * cols + j * b.cols;
                for l in 0..b.cols {
                    entries[base + l] = aij * b.get(k, l);
                }
            }
        }
    }
    Ok(DenseMatrix {
        rows,
        cols,
        entries,
    })
}

/// Full unitary of `circuit` on `num_qubits` qubits, built column by column
/// by simulating each basis state (qubit 0 least significant).
pub fn dense_unitary_of_circuit(circuit: &Circuit, num_qubits: usize) -> Result<DenseMatrix> {
    if num_qubits == 0 || num_qubits > MAX_DENSE_QUBITS {
        return Err(Error::Capacity(format!(
            "dense unitary limited to 1..={MAX_DENSE_QUBITS} qubits, got {num_qubits}"
        )));
    }
    if circuit.num_qubits() > num_qubits {
        return Err(Error::Validation(format!(
            "{}-qubit circuit does not fit in {num_qubits} qubits",
            circuit.num_qubits()
        )));
    }
    let widened;
    let circuit = if circuit.num_qubits() == num_qubits {
        circuit
    } else {
        widened = Circuit::from_gates(num_qubits, circuit.gates().iter().copied())?;
        &widened
    };
    let dim = 1usize << num_qubits;
    let mut out = DenseMatrix::zeros(dim, dim)?;
    for col in 0..dim {
        let mut basis = vec![Complex64::new(0.0, 0.0); dim];
        basis[col] = Complex64::new(1.0, 0.0);
        let mut state = Statevector::from_amplitudes(basis)?;
        apply_circuit(&mut state, circuit)?;
        for (row, amp) in state.amplitudes().iter().enumerate() {
            out.entries[row * dim + col] = *amp;
        }
    }
    Ok(out)
}
