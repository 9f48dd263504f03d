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

//! Gate-level circuit representation and OpenQASM 2.0 export.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// A gate from the QFT gate set. Angles are in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate {
    H { target: usize },
    X { target: usize },
    /// `diag(1, e^{iθ})` on `target`.
    Phase { target: usize, theta: f64 },
    /// `e^{iθ}` on the `|11⟩` component of (`control`, `target`). Symmetric in
    /// its operands; both roles are kept for export.
    ControlledPhase { control: usize, target: usize, theta: f64 },
    Swap { a: usize, b: usize },
}

impl Gate {
    pub fn h(target: usize) -> Self {
        Gate::H { target }
    }

    pub fn x(target: usize) -> Self {
        Gate::X { target }
    }

    pub fn phase(target: usize, theta: f64) -> Self {
        Gate::Phase { target, theta }
    }

    pub fn cphase(control: usize, target: usize, theta: f64) -> Self {
        Gate::ControlledPhase {
            control,
            target,
            theta,
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::Swap { a, b }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H { .. } => "h",
            Gate::X { .. } => "x",
            Gate::Phase { .. } => "p",
            Gate::ControlledPhase { .. } => "cp",
            Gate::Swap { .. } => "swap",
        }
    }

    /// Largest qubit index the gate touches.
    pub fn max_qubit(&self) -> usize {
        match *self {
            Gate::H { target } | Gate::X { target } | Gate::Phase { target, .. } => target,
            Gate::ControlledPhase { control, target, .. } => control.max(target),
            Gate::Swap { a, b } => a.max(b),
        }
    }

    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::Phase { target, theta } => Gate::Phase {
                target,
                theta: -theta,
            },
            Gate::ControlledPhase {
                control,
                target,
                theta,
            } => Gate::ControlledPhase {
                control,
                target,
                theta: -theta,
            },
            g => g,
        }
    }

    /// Checks operand bounds, distinctness and angle finiteness.
    pub fn validate(&self, num_qubits: usize) -> Result<()> {
        if self.max_qubit() >= num_qubits {
            return Err(Error::Validation(format!(
                "{self:?} addresses a qubit outside 0..{num_qubits}"
            )));
        }
        match *self {
            Gate::ControlledPhase { control, target, .. } if control == target => Err(
                Error::Validation(format!("{self:?} repeats qubit {control}")),
            ),
            Gate::Swap { a, b } if a == b => {
                Err(Error::Validation(format!("{self:?} repeats qubit {a}")))
            }
            Gate::Phase { theta, .. } | Gate::ControlledPhase { theta, .. }
                if !theta.is_finite() =>
            {
                Err(Error::Validation(format!("{self:?} has a non-finite angle")))
            }
            _ => Ok(()),
        }
    }
}

/// Per-kind gate tally.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    pub h: usize,
    pub x: usize,
    pub phase: usize,
    pub controlled_phase: usize,
    pub swap: usize,
}

impl GateCounts {
    pub fn total(&self) -> usize {
        self.h + self.x + self.phase + self.controlled_phase + self.swap
    }

    fn record(&mut self, gate: &Gate) {
        match gate {
            Gate::H { .. } => self.h += 1,
            Gate::X { .. } => self.x += 1,
            Gate::Phase { .. } => self.phase += 1,
            Gate::ControlledPhase { .. } => self.controlled_phase += 1,
            Gate::Swap { .. } => self.swap += 1,
        }
    }
}

impl std::ops::Add for GateCounts {
    type Output = GateCounts;

    fn add(self, rhs: GateCounts) -> GateCounts {
        GateCounts {
            h: self.h + rhs.h,
            x: self.x + rhs.x,
            phase: self.phase + rhs.phase,
            controlled_phase: self.controlled_phase + rhs.controlled_phase,
            swap: self.swap + rhs.swap,
        }
    }
}

impl std::iter::Sum for GateCounts {
    fn sum<I: Iterator<Item = GateCounts>>(iter: I) -> GateCounts {
        iter.fold(GateCounts::default(), |acc, c| acc + c)
    }
}

/// Ordered gate list over a fixed number of qubits. Gates apply first to last.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(num_qubits: usize, gates: impl IntoIterator<Item = Gate>) -> Result<Self> {
        let mut circuit = Self::new(num_qubits);
        for gate in gates {
            circuit.append(gate)?;
        }
        Ok(circuit)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn append(&mut self, gate: Gate) -> Result<&mut Self> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(self)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::Validation(format!(
                "cannot compose a {}-qubit circuit with a {}-qubit circuit",
                self.num_qubits, other.num_qubits
            )));
        }
        let mut gates = Vec::with_capacity(self.len() + other.len());
        gates.extend_from_slice(&self.gates);
        gates.extend_from_slice(&other.gates);
        Ok(Circuit {
            num_qubits: self.num_qubits,
            gates,
        })
    }

    pub fn adjoint(&self) -> Circuit {
        Circuit {
            num_qubits: self.num_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }

    pub fn gate_count(&self) -> GateCounts {
        let mut counts = GateCounts::default();
        for gate in &self.gates {
            counts.record(gate);
        }
        counts
    }

    /// OpenQASM 2.0 text with LF line endings. Angles are written with Rust's
    /// shortest round-trip `f64` formatting, so the output is byte-stable.
    pub fn export_qasm(&self) -> String {
        let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
        let _ = writeln!(out, "qreg q[{}];", self.num_qubits);
        for gate in &self.gates {
            let _ = match *gate {
                Gate::H { target } => writeln!(out, "h q[{target}];"),
                Gate::X { target } => writeln!(out, "x q[{target}];"),
                Gate::Phase { target, theta } => writeln!(out, "p({theta:?}) q[{target}];"),
                Gate::ControlledPhase {
                    control,
                    target,
                    theta,
                } => writeln!(out, "cp({theta:?}) q[{control}],q[{target}];"),
                Gate::Swap { a, b } => writeln!(out, "swap q[{a}],q[{b}];"),
            };
        }
        out
    }
}
