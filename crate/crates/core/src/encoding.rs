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

//! Array ↔ statevector mapping.
//!
//! An array with extents `N₁..N_d` (each a power of two ≥ 2) is flattened with
//! dimension 1 varying fastest, so element `(k₁..k_d)` sits at
//! `k₁ + N₁k₂ + N₁N₂k₃ + …`. Dimension `i` then owns the contiguous qubit span
//! `[n₁+…+n_{i−1}, n₁+…+nᵢ)`, with dimension 1 on the lowest qubits.

use std::ops::Range;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{check_qubit_capacity, norm, Statevector};

/// Extents of a d-dimensional power-of-two array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArrayLayout {
    dims: Vec<usize>,
    qubits: Vec<usize>,
}

impl ArrayLayout {
    pub fn new(dims: impl Into<Vec<usize>>) -> Result<Self> {
        let dims = dims.into();
        if dims.is_empty() {
            return Err(Error::Validation("layout needs at least one dimension".into()));
        }
        let mut qubits = Vec::with_capacity(dims.len());
        for (i, &n) in dims.iter().enumerate() {
            if n < 2 || !n.is_power_of_two() {
                return Err(Error::Validation(format!(
                    "dimension {} has extent {n}; extents must be powers of two >= 2",
                    i + 1
                )));
            }
            qubits.push(n.trailing_zeros() as usize);
        }
        check_qubit_capacity(qubits.iter().sum())?;
        Ok(Self { dims, qubits })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    /// `n₁..n_d`.
    pub fn qubit_counts(&self) -> &[usize] {
        &self.qubits
    }

    /// `M = N₁·…·N_d`.
    pub fn total_elements(&self) -> usize {
        1 << self.total_qubits()
    }

    pub fn total_qubits(&self) -> usize {
        self.qubits.iter().sum()
    }

    /// `N₁·…·N_{i−1}` for 0-based dimension `i`; 1 for the first dimension.
    pub fn extent_below(&self, i: usize) -> usize {
        self.dims[..i].iter().product()
    }

    /// `N_{i+1}·…·N_d` for 0-based dimension `i`; 1 for the last dimension.
    pub fn extent_above(&self, i: usize) -> usize {
        self.dims[i + 1..].iter().product()
    }

    /// Flat position of `indices` (0-based, dimension 1 fastest).
    pub fn flat_index(&self, indices: &[usize]) -> Result<usize> {
        if indices.len() != self.ndim() {
            return Err(Error::Bounds(format!(
                "{} indices for a {}-dimensional layout",
                indices.len(),
                self.ndim()
            )));
        }
        let mut flat = 0;
        let mut stride = 1;
        for (i, (&k, &n)) in indices.iter().zip(&self.dims).enumerate() {
            if k >= n {
                return Err(Error::Bounds(format!(
                    "index {k} out of range for dimension {} of extent {n}",
                    i + 1
                )));
            }
            flat += k * stride;
            stride *= n;
        }
        Ok(flat)
    }

    /// Inverse of [`ArrayLayout::flat_index`].
    pub fn unflatten(&self, flat: usize) -> Result<Vec<usize>> {
        if flat >= self.total_elements() {
            return Err(Error::Bounds(format!(
                "flat index {flat} out of range for {} elements",
                self.total_elements()
            )));
        }
        let mut rest = flat;
        Ok(self
            .dims
            .iter()
            .map(|&n| {
                let k = rest % n;
                rest /= n;
                k
            })
            .collect())
    }
}

/// Per-dimension qubit spans of the transform circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterMap {
    spans: Vec<Range<usize>>,
}

impl RegisterMap {
    pub fn spans(&self) -> &[Range<usize>] {
        &self.spans
    }

    pub fn span(&self, dim: usize) -> Range<usize> {
        self.spans[dim].clone()
    }

    pub fn total_qubits(&self) -> usize {
        self.spans.last().map_or(0, |s| s.end)
    }
}

pub fn register_map(layout: &ArrayLayout) -> RegisterMap {
    let mut start = 0;
    let spans = layout
        .qubit_counts()
        .iter()
        .map(|&n| {
            let span = start..start + n;
            start += n;
            span
        })
        .collect();
    RegisterMap { spans }
}

/// A d-dimensional complex array stored flat, dimension 1 fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct MdArray {
    layout: ArrayLayout,
    data: Vec<Complex64>,
}

impl MdArray {
    pub fn new(layout: ArrayLayout, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != layout.total_elements() {
            return Err(Error::Layout(format!(
                "{} values for a layout of {} elements",
                data.len(),
                layout.total_elements()
            )));
        }
        if let Some(i) = data.iter().position(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Validation(format!("element {i} is not finite")));
        }
        Ok(Self { layout, data })
    }

    pub fn from_fn(layout: ArrayLayout, mut f: impl FnMut(&[usize]) -> Complex64) -> Result<Self> {
        let data = (0..layout.total_elements())
            .map(|m| {
                let k = layout.unflatten(m).expect("index within layout");
                f(&k)
            })
            .collect();
        Self::new(layout, data)
    }

    pub fn layout(&self) -> &ArrayLayout {
        &self.layout
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Complex64> {
        self.data
    }

    pub fn get(&self, indices: &[usize]) -> Result<Complex64> {
        Ok(self.data[self.layout.flat_index(indices)?])
    }
}

/// Prefactor applied when reading amplitudes back as an array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScaleConvention {
    /// Amplitudes as they are.
    Raw,
    /// Unnormalized DFT scale, directly comparable with the classical transform.
    #[default]
    Classical,
    /// Unitary scale: amplitudes times the encoding norm.
    Unitary,
}

impl ScaleConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScaleConvention::Raw => "raw",
            ScaleConvention::Classical => "classical",
            ScaleConvention::Unitary => "unitary",
        }
    }
}

impl FromStr for ScaleConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "raw" => Ok(ScaleConvention::Raw),
            "classical" => Ok(ScaleConvention::Classical),
            "unitary" => Ok(ScaleConvention::Unitary),
            other => Err(Error::Validation(format!("unknown scale convention '{other}'"))),
        }
    }
}

/// Normalizes the array into a statevector; also returns `‖data‖`.
pub fn encode(array: &MdArray) -> Result<(Statevector, f64)> {
    let factor = norm(array.data());
    if factor == 0.0 {
        return Err(Error::Degenerate("cannot normalize an all-zero array".into()));
    }
    let amplitudes = array.data().iter().map(|a| a / factor).collect();
    Ok((Statevector::from_amplitudes(amplitudes)?, factor))
}

fn decode_scaled(state: &Statevector, scale: f64, layout: &ArrayLayout) -> Result<MdArray> {
    if state.num_qubits() != layout.total_qubits() {
        return Err(Error::Layout(format!(
            "{}-qubit state does not match a {}-qubit layout",
            state.num_qubits(),
            layout.total_qubits()
        )));
    }
    let data = state.amplitudes().iter().map(|a| a * scale).collect();
    MdArray::new(layout.clone(), data)
}

/// Reads a forward-transformed state back as an array.
///
/// `Classical` multiplies by `norm_factor·√M`, giving the unnormalized
/// transform of the original data.
pub fn decode(
    state: &Statevector,
    norm_factor: f64,
    layout: &ArrayLayout,
    convention: ScaleConvention,
) -> Result<MdArray> {
    let scale = match convention {
        ScaleConvention::Raw => 1.0,
        ScaleConvention::Classical => norm_factor * (layout.total_elements() as f64).sqrt(),
        ScaleConvention::Unitary => norm_factor,
    };
    decode_scaled(state, scale, layout)
}

/// Reads an inverse-transformed state back as an array. `Classical` here is
/// the inverse DFT with its `1/M`, so it divides by `√M` instead.
pub fn decode_inverse(
    state: &Statevector,
    norm_factor: f64,
    layout: &ArrayLayout,
    convention: ScaleConvention,
) -> Result<MdArray> {
    let scale = match convention {
        ScaleConvention::Raw => 1.0,
        ScaleConvention::Classical => norm_factor / (layout.total_elements() as f64).sqrt(),
        ScaleConvention::Unitary => norm_factor,
    };
    decode_scaled(state, scale, layout)
}
