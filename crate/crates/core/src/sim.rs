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

//! In-place statevector simulation.
//!
//! Single-qubit gates act on amplitude pairs `(i, i | 2^t)` with bit `t`
//! clear in `i`. Amplitude arrays at or above [`PARALLEL_THRESHOLD`] are
//! split into disjoint chunks across the rayon pool.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use crate::circuit::{Circuit, Gate};
use crate::encoding::{encode, MdArray};
use crate::error::{Error, Result};
use crate::qft::{mdqft, mdqft_no_swap, QftPlan};
use crate::state::Statevector;

pub const PARALLEL_THRESHOLD: usize = 1 << 14;

/// Applies `op(lo, hi)` to every pair of amplitudes differing only in bit `target`.
fn for_each_pair<F>(amps: &mut [Complex64], target: usize, op: F)
where
    F: Fn(&mut Complex64, &mut Complex64) + Sync,
{
    let half = 1usize << target;
    let block = |chunk: &mut [Complex64]| {
        let (lo, hi) = chunk.split_at_mut(half);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            op(a, b);
        }
    };
    if amps.len() >= PARALLEL_THRESHOLD {
        amps.par_chunks_mut(2 * half).for_each(block);
    } else {
        amps.chunks_mut(2 * half).for_each(block);
    }
}

fn for_each_masked<F>(amps: &mut [Complex64], mask: usize, op: F)
where
    F: Fn(&mut Complex64) + Sync,
{
    let visit = |(i, a): (usize, &mut Complex64)| {
        if i & mask == mask {
            op(a);
        }
    };
    if amps.len() >= PARALLEL_THRESHOLD {
        amps.par_iter_mut().enumerate().for_each(visit);
    } else {
        amps.iter_mut().enumerate().for_each(visit);
    }
}

fn swap_qubits(amps: &mut [Complex64], a: usize, b: usize) {
    let (low, high) = if a < b { (a, b) } else { (b, a) };
    let half = 1usize << high;
    let low_bit = 1usize << low;
    // Within each block of 2^(high+1): index i in the lower half has bit `high`
    // clear; pair i (bit `low` set) with (i ^ low_bit) in the upper half.
    let block = |chunk: &mut [Complex64]| {
        let (lo, hi) = chunk.split_at_mut(half);
        for i in 0..half {
            if i & low_bit != 0 {
                std::mem::swap(&mut lo[i], &mut hi[i ^ low_bit]);
            }
        }
    };
    if amps.len() >= PARALLEL_THRESHOLD {
        amps.par_chunks_mut(2 * half).for_each(block);
    } else {
        amps.chunks_mut(2 * half).for_each(block);
    }
}

pub fn apply_gate(state: &mut Statevector, gate: &Gate) -> Result<()> {
    gate.validate(state.num_qubits())?;
    let amps = state.amplitudes_mut();
    match *gate {
        Gate::H { target } => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            for_each_pair(amps, target, |a, b| {
                let (x, y) = (*a, *b);
                *a = (x + y) * s;
                *b = (x - y) * s;
            });
        }
        Gate::X { target } => for_each_pair(amps, target, std::mem::swap),
        Gate::Phase { target, theta } => {
            let phase = Complex64::from_polar(1.0, theta);
            for_each_masked(amps, 1 << target, |a| *a *= phase);
        }
        Gate::ControlledPhase {
            control,
            target,
            theta,
        } => {
            let phase = Complex64::from_polar(1.0, theta);
            for_each_masked(amps, (1 << control) | (1 << target), |a| *a *= phase);
        }
        Gate::Swap { a, b } => swap_qubits(amps, a, b),
    }
    Ok(())
}

/// Applies the gates of `circuit` in order. The circuit may be narrower than
/// the state; its qubits map onto the lowest state qubits.
pub fn apply_circuit(state: &mut Statevector, circuit: &Circuit) -> Result<()> {
    if circuit.num_qubits() > state.num_qubits() {
        return Err(Error::Validation(format!(
            "{}-qubit circuit applied to a {}-qubit state",
            circuit.num_qubits(),
            state.num_qubits()
        )));
    }
    circuit.gates().iter().try_for_each(|g| apply_gate(state, g))
}

/// `|amplitude|²` per outcome index. No clamping of tiny values.
pub fn probabilities(state: &Statevector) -> Vec<f64> {
    state.amplitudes().iter().map(|a| a.norm_sqr()).collect()
}

/// Shot counts keyed by outcome index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleHistogram {
    num_qubits: usize,
    shots: u64,
    counts: BTreeMap<usize, u64>,
}

impl SampleHistogram {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn shots(&self) -> u64 {
        self.shots
    }

    /// Observed outcomes only, ascending by index.
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, outcome: usize) -> u64 {
        self.counts.get(&outcome).copied().unwrap_or(0)
    }

    pub fn frequency(&self, outcome: usize) -> f64 {
        self.count(outcome) as f64 / self.shots as f64
    }

    /// Relabels every outcome through `permutation` (old index → new index).
    pub fn permuted(&self, permutation: &[usize]) -> Result<SampleHistogram> {
        if permutation.len() != 1 << self.num_qubits {
            return Err(Error::Validation(format!(
                "permutation of length {} for {} qubits",
                permutation.len(),
                self.num_qubits
            )));
        }
        Ok(SampleHistogram {
            num_qubits: self.num_qubits,
            shots: self.shots,
            counts: self
                .counts
                .iter()
                .map(|(&k, &v)| (permutation[k], v))
                .collect(),
        })
    }

    /// Total-variation distance between observed frequencies and `probs`.
    pub fn total_variation(&self, probs: &[f64]) -> f64 {
        0.5 * probs
            .iter()
            .enumerate()
            .map(|(i, p)| (self.frequency(i) - p).abs())
            .sum::<f64>()
    }
}

/// Draws `shots` iid outcomes from `probabilities(state)`.
///
/// The generator is ChaCha20 seeded with `seed_from_u64(seed)`; each shot
/// takes one `f64` uniform in `[0, 1)`, scales it by the total probability and
/// selects the first outcome whose cumulative probability exceeds it. Output
/// is identical across platforms for the same `(state, shots, seed)`.
pub fn sample(state: &Statevector, shots: u64, seed: u64) -> Result<SampleHistogram> {
    if shots == 0 {
        return Err(Error::Validation("shots must be at least 1".into()));
    }
    let mut cumulative = Vec::with_capacity(state.len());
    let mut acc = 0.0;
    for p in probabilities(state) {
        acc += p;
        cumulative.push(acc);
    }
    if acc <= 0.0 {
        return Err(Error::Degenerate("state has zero norm".into()));
    }
    let last_supported = cumulative
        .iter()
        .rposition(|&c| c < acc)
        .map_or(0, |i| i + 1);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut counts = BTreeMap::new();
    for _ in 0..shots {
        let u = rng.gen::<f64>() * acc;
        let outcome = cumulative.partition_point(|&c| c <= u).min(last_supported);
        *counts.entry(outcome).or_insert(0) += 1;
    }
    Ok(SampleHistogram {
        num_qubits: state.num_qubits(),
        shots,
        counts,
    })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Omit the terminal swaps and correct the bit order classically.
    pub no_swap: bool,
}

/// Everything produced by [`run_mdqft`].
#[derive(Debug, Clone)]
pub struct MdqftRun {
    /// State straight out of the circuit (bit-reversed registers if `no_swap`).
    pub state: Statevector,
    pub plan: QftPlan,
    pub norm_factor: f64,
}

impl MdqftRun {
    /// Output state in transform order, with the plan's permutation applied.
    pub fn ordered_state(&self) -> Statevector {
        self.plan.reorder_state(&self.state)
    }
}

/// Encodes `array`, runs the multidimensional QFT on it and returns the raw
/// output together with the plan and normalization factor.
pub fn run_mdqft(array: &MdArray, options: RunOptions) -> Result<MdqftRun> {
    let (mut state, norm_factor) = encode(array)?;
    let plan = if options.no_swap {
        mdqft_no_swap(array.layout())?
    } else {
        mdqft(array.layout())?
    };
    apply_circuit(&mut state, plan.circuit())?;
    Ok(MdqftRun {
        state,
        plan,
        norm_factor,
    })
}
