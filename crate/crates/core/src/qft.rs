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

//! QFT circuit construction: one register, the d-dimensional transform,
//! the swap-free variant and the batched extension.

use std::f64::consts::PI;
use std::ops::Range;

use crate::circuit::{Circuit, Gate, GateCounts};
use crate::encoding::{register_map, ArrayLayout, RegisterMap};
use crate::error::{Error, Result};
use crate::state::{check_qubit_capacity, Statevector};

/// Textbook QFT gates on `span`: from the most significant qubit down, an H
/// followed by controlled phases `2π/2^(m+1)` from each qubit `m` places below.
fn qft_gates(span: Range<usize>, with_swaps: bool) -> Vec<Gate> {
    let mut gates = Vec::new();
    for target in span.clone().rev() {
        gates.push(Gate::h(target));
        for control in (span.start..target).rev() {
            gates.push(Gate::cphase(control, target, PI / (1u64 << (target - control)) as f64));
        }
    }
    if with_swaps {
        let n = span.len();
        for i in 0..n / 2 {
            gates.push(Gate::swap(span.start + i, span.end - 1 - i));
        }
    }
    gates
}

/// QFT on the qubits in `span` of a `num_qubits`-wide circuit. Its unitary on
/// the span is `V_N/√N` with `N = 2^len`, qubit `span.start` least significant.
pub fn qft_register(num_qubits: usize, span: Range<usize>) -> Result<Circuit> {
    if span.is_empty() {
        return Err(Error::Validation("QFT span is empty".into()));
    }
    if span.end > num_qubits {
        return Err(Error::Validation(format!(
            "span {span:?} exceeds {num_qubits} qubits"
        )));
    }
    Circuit::from_gates(num_qubits, qft_gates(span, true))
}

/// A built transform: the circuit plus the classical bookkeeping needed to read
/// its output.
#[derive(Debug, Clone, PartialEq)]
pub struct QftPlan {
    layout: ArrayLayout,
    register_map: RegisterMap,
    circuit: Circuit,
    batch_qubits: usize,
    /// Raw outcome index → transform-order index.
    output_permutation: Vec<usize>,
}

impl QftPlan {
    pub fn layout(&self) -> &ArrayLayout {
        &self.layout
    }

    pub fn register_map(&self) -> &RegisterMap {
        &self.register_map
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn batch_qubits(&self) -> usize {
        self.batch_qubits
    }

    pub fn output_permutation(&self) -> &[usize] {
        &self.output_permutation
    }

    pub fn is_identity_permutation(&self) -> bool {
        self.output_permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Moves amplitude `i` of a raw circuit output to `output_permutation[i]`.
    pub fn reorder_state(&self, raw: &Statevector) -> Statevector {
        assert_eq!(raw.len(), self.output_permutation.len(), "state width does not match plan");
        let mut out = raw.amplitudes().to_vec();
        for (i, amp) in raw.amplitudes().iter().enumerate() {
            out[self.output_permutation[i]] = *amp;
        }
        Statevector::from_amplitudes(out).expect("permutation preserves shape")
    }

    /// Inverse of [`QftPlan::reorder_state`]: takes a transform-order state
    /// back to the circuit's raw output order.
    pub fn unorder_state(&self, ordered: &Statevector) -> Statevector {
        assert_eq!(ordered.len(), self.output_permutation.len(), "state width does not match plan");
        let out = self
            .output_permutation
            .iter()
            .map(|&p| ordered.amplitudes()[p])
            .collect();
        Statevector::from_amplitudes(out).expect("permutation preserves shape")
    }
}

fn reversed_register_permutation(map: &RegisterMap, total_qubits: usize) -> Vec<usize> {
    (0..1usize << total_qubits)
        .map(|raw| {
            let mut out = raw;
            for span in map.spans() {
                let width = span.len();
                let mask = ((1usize << width) - 1) << span.start;
                let digit = (raw & mask) >> span.start;
                let reversed = digit.reverse_bits() >> (usize::BITS as usize - width);
                out = (out & !mask) | (reversed << span.start);
            }
            out
        })
        .collect()
}

fn build(layout: &ArrayLayout, order: &[usize], with_swaps: bool, batch_qubits: usize) -> Result<QftPlan> {
    let map = register_map(layout);
    let total = layout.total_qubits() + batch_qubits;
    check_qubit_capacity(total)?;
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..layout.ndim()).collect::<Vec<_>>() {
        return Err(Error::Validation(format!(
            "{order:?} is not an ordering of {} dimensions",
            layout.ndim()
        )));
    }
    let gates = order
        .iter()
        .flat_map(|&dim| qft_gates(map.span(dim), with_swaps));
    let circuit = Circuit::from_gates(total, gates)?;
    let output_permutation = if with_swaps {
        (0..1usize << total).collect()
    } else {
        reversed_register_permutation(&map, total)
    };
    Ok(QftPlan {
        layout: layout.clone(),
        register_map: map,
        circuit,
        batch_qubits,
        output_permutation,
    })
}

/// The d-dimensional QFT: one register QFT per dimension, dimension 1 first.
pub fn mdqft(layout: &ArrayLayout) -> Result<QftPlan> {
    let order: Vec<usize> = (0..layout.ndim()).collect();
    build(layout, &order, true, 0)
}

/// Like [`mdqft`] but with the register QFTs emitted in `order` (0-based
/// dimensions). The blocks act on disjoint qubits, so the unitary is unchanged.
pub fn mdqft_in_order(layout: &ArrayLayout, order: &[usize]) -> Result<QftPlan> {
    build(layout, order, true, 0)
}

/// [`mdqft`] without terminal swaps. The plan's output permutation reverses
/// the bit order inside every register so that reordered outcomes match
/// [`mdqft`] exactly.
pub fn mdqft_no_swap(layout: &ArrayLayout) -> Result<QftPlan> {
    let order: Vec<usize> = (0..layout.ndim()).collect();
    build(layout, &order, false, 0)
}

/// [`mdqft`] on a state holding `2^batch_qubits` arrays stacked one after
/// another. The extra qubits sit above the array registers and are untouched,
/// giving `I_{2^b} ⊗ U`.
pub fn batched_mdqft(layout: &ArrayLayout, batch_qubits: usize) -> Result<QftPlan> {
    let order: Vec<usize> = (0..layout.ndim()).collect();
    build(layout, &order, true, batch_qubits)
}

/// `Σᵢ {H: nᵢ, CP: nᵢ(nᵢ−1)/2, Swap: ⌊nᵢ/2⌋}`.
pub fn predicted_gate_count(layout: &ArrayLayout) -> GateCounts {
    layout
        .qubit_counts()
        .iter()
        .map(|&n| GateCounts {
            h: n,
            controlled_phase: n * (n - 1) / 2,
            swap: n / 2,
            ..GateCounts::default()
        })
        .sum()
}
