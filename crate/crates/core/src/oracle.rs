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

//! Classical reference transforms with the `ω_N = e^{+2πi/N}` forward sign.
//!
//! Nothing here touches the simulator, so its results are an independent
//! check on every quantum spectrum. The naive engine stays in the build as
//! the anchor for both the FFT engine and the circuits.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dense::{DenseMatrix, MAX_DENSE_DIM};
use crate::encoding::MdArray;
use crate::error::{Error, Result};

/// `[ω_N^0, …, ω_N^{N−1}]`, each from its own `cos`/`sin` evaluation.
fn roots_of_unity(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64))
        .collect()
}

fn check_power_of_two(n: usize) -> Result<()> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::Validation(format!("length {n} is not a power of two")));
    }
    Ok(())
}

/// `V_N[r, c] = ω_N^{rc}`.
pub fn vandermonde(n: usize) -> Result<DenseMatrix> {
    check_power_of_two(n)?;
    if n > MAX_DENSE_DIM {
        return Err(Error::Capacity(format!("Vandermonde matrix of order {n}")));
    }
    let roots = roots_of_unity(n);
    DenseMatrix::from_fn(n, n, |r, c| roots[(r * c) % n])
}

/// `x̂_k = Σ_m ω_N^{km} x_m`, evaluated term by term.
pub fn dft_1d_naive(input: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = input.len();
    check_power_of_two(n)?;
    let roots = roots_of_unity(n);
    Ok((0..n)
        .map(|k| {
            input
                .iter()
                .enumerate()
                .map(|(m, x)| roots[(k * m) % n] * x)
                .sum()
        })
        .collect())
}

/// Iterative radix-2 Cooley-Tukey (decimation in time), same sign and scale
/// as [`dft_1d_naive`].
pub fn fft_radix2(input: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = input.len();
    check_power_of_two(n)?;
    let bits = n.trailing_zeros();
    let mut data: Vec<Complex64> = if n == 1 {
        input.to_vec()
    } else {
        (0..n)
            .map(|i| input[i.reverse_bits() >> (usize::BITS - bits)])
            .collect()
    };
    let roots = roots_of_unity(n);
    let mut len = 2;
    while len <= n {
        let half = len / 2;
        let step = n / len;
        for block in data.chunks_mut(len) {
            let (lo, hi) = block.split_at_mut(half);
            for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let t = roots[j * step] * *b;
                let u = *a;
                *a = u + t;
                *b = u - t;
            }
        }
        len <<= 1;
    }
    Ok(data)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DftEngine {
    Naive,
    #[default]
    Fft,
}

impl DftEngine {
    fn transform(self, line: &[Complex64]) -> Result<Vec<Complex64>> {
        match self {
            DftEngine::Naive => dft_1d_naive(line),
            DftEngine::Fft => fft_radix2(line),
        }
    }
}

/// Row-column multidimensional DFT: dimension 1 first, then 2, … .
pub fn md_dft(array: &MdArray, engine: DftEngine) -> Result<MdArray> {
    let order: Vec<usize> = (0..array.layout().ndim()).collect();
    md_dft_in_order(array, engine, &order)
}

/// [`md_dft`] with the per-dimension passes run in `order` (0-based).
pub fn md_dft_in_order(array: &MdArray, engine: DftEngine, order: &[usize]) -> Result<MdArray> {
    let layout = array.layout();
    let mut data = array.data().to_vec();
    let mut line = Vec::new();
    for &dim in order {
        if dim >= layout.ndim() {
            return Err(Error::Validation(format!("no dimension {dim} in layout")));
        }
        let n = layout.dims()[dim];
        let stride = layout.extent_below(dim);
        for outer in 0..layout.extent_above(dim) {
            for inner in 0..stride {
                let base = outer * stride * n + inner;
                line.clear();
                line.extend((0..n).map(|k| data[base + k * stride]));
                for (k, v) in engine.transform(&line)?.into_iter().enumerate() {
                    data[base + k * stride] = v;
                }
            }
        }
    }
    MdArray::new(layout.clone(), data)
}

/// Outcome of [`compare_spectra`].
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    /// Flat index of the worst violation of `abs_tol + rel_tol·|reference|`.
    pub worst_index: usize,
    pub pass: bool,
}

/// Elementwise comparison of `actual` against `reference`. Passes iff every
/// element satisfies `|a − r| ≤ abs_tol + rel_tol·|r|`.
pub fn compare_spectra(
    actual: &MdArray,
    reference: &MdArray,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<SpectrumReport> {
    if actual.layout() != reference.layout() {
        return Err(Error::Layout(format!(
            "comparing dims {:?} against {:?}",
            actual.layout().dims(),
            reference.layout().dims()
        )));
    }
    let mut report = SpectrumReport {
        max_abs_err: 0.0,
        max_rel_err: 0.0,
        worst_index: 0,
        pass: true,
    };
    let mut worst_excess = f64::NEG_INFINITY;
    for (i, (a, r)) in actual.data().iter().zip(reference.data()).enumerate() {
        let err = (a - r).norm();
        let mag = r.norm();
        report.max_abs_err = report.max_abs_err.max(err);
        if mag > 0.0 {
            report.max_rel_err = report.max_rel_err.max(err / mag);
        }
        let excess = err - (abs_tol + rel_tol * mag);
        if excess > worst_excess {
            worst_excess = excess;
            report.worst_index = i;
        }
    }
    report.pass = worst_excess <= 0.0;
    Ok(report)
}
