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

//! Dense-matrix checks of the transform circuits against Kronecker products
//! of Vandermonde matrices built by the oracle.

use mdqft::dense::{dense_unitary_of_circuit, kron, DenseMatrix};
use mdqft::encoding::register_map;
use mdqft::oracle::{vandermonde, DftEngine};
use mdqft::qft::{batched_mdqft, mdqft, mdqft_no_swap, qft_register};
use mdqft::{
    apply_circuit, compare_spectra, decode, encode, md_dft, probabilities, run_mdqft, ArrayLayout, Complex64,
    MdArray, RunOptions, ScaleConvention, Statevector,
};

fn qft_matrix(n: usize) -> DenseMatrix {
    vandermonde(n).unwrap().scale(1.0 / (n as f64).sqrt())
}

fn identity(n: usize) -> DenseMatrix {
    DenseMatrix::identity(n).unwrap()
}

fn layout(dims: &[usize]) -> ArrayLayout {
    ArrayLayout::new(dims.to_vec()).unwrap()
}

fn test_array(dims: &[usize]) -> MdArray {
    MdArray::from_fn(layout(dims), |k| {
        let t: f64 = k.iter().enumerate().map(|(i, &x)| (2 * i + 3) as f64 * x as f64).sum();
        Complex64::new((0.37 * t + 0.1).cos(), (0.91 * t).sin() - 0.2)
    })
    .unwrap()
}

#[test]
fn qft4_circuit_is_scaled_vandermonde() {
    let u = dense_unitary_of_circuit(&qft_register(2, 0..2).unwrap(), 2).unwrap();
    assert!(u.max_abs_diff(&qft_matrix(4)) < 1e-15);
    // ω₄ = e^{iπ/2}: column 1 is (1, i, −1, −i)/2.
    assert!((u.get(1, 1) - Complex64::new(0.0, 0.5)).norm() < 1e-15);
}

#[test]
fn register_qft_matches_vandermonde_up_to_64() {
    for n in 1..=6 {
        let u = dense_unitary_of_circuit(&qft_register(n, 0..n).unwrap(), n).unwrap();
        assert!(u.max_abs_diff(&qft_matrix(1 << n)) < 1e-13, "n = {n}");
    }
}

#[test]
fn two_dimensional_4x4_is_product_of_embedded_blocks() {
    let u = dense_unitary_of_circuit(mdqft(&layout(&[4, 4])).unwrap().circuit(), 4).unwrap();
    let u1 = kron(&identity(4), &qft_matrix(4)).unwrap();
    let u2 = kron(&qft_matrix(4), &identity(4)).unwrap();
    assert!(u.max_abs_diff(&u2.matmul(&u1).unwrap()) < 1e-13);
    assert!(u.max_abs_diff(&kron(&qft_matrix(4), &qft_matrix(4)).unwrap()) < 1e-13);
}

#[test]
fn each_block_has_identity_padding_structure() {
    for dims in [vec![2, 4, 2], vec![8, 2], vec![2, 2, 2, 2], vec![4, 8, 2]] {
        let l = layout(&dims);
        let map = register_map(&l);
        for i in 0..l.ndim() {
            let block = qft_register(l.total_qubits(), map.span(i)).unwrap();
            let u = dense_unitary_of_circuit(&block, l.total_qubits()).unwrap();
            let inner = kron(&qft_matrix(l.dims()[i]), &identity(l.extent_below(i))).unwrap();
            let expected = kron(&identity(l.extent_above(i)), &inner).unwrap();
            assert!(u.max_abs_diff(&expected) < 1e-12, "dims {dims:?}, block {i}");
        }
    }
}

#[test]
fn expanded_block_entries() {
    // Ũᵢ for N_i = 4 above N_{i↓} = 2: entry (r, c) is ω₄^{(r/2)(c/2)}/2 when
    // r ≡ c mod 2, zero otherwise.
    let l = layout(&[2, 4]);
    let block = qft_register(3, register_map(&l).span(1)).unwrap();
    let u = dense_unitary_of_circuit(&block, 3).unwrap();
    let w = vandermonde(4).unwrap();
    for r in 0..8 {
        for c in 0..8 {
            let expected = if r % 2 == c % 2 { w.get(r / 2, c / 2) * 0.5 } else { Complex64::new(0.0, 0.0) };
            assert!((u.get(r, c) - expected).norm() < 1e-15);
        }
    }
}

#[test]
fn circuits_are_unitary() {
    for dims in [vec![2], vec![256], vec![4, 4], vec![2, 8, 2, 2], vec![16, 16]] {
        let l = layout(&dims);
        for plan in [mdqft(&l).unwrap(), mdqft_no_swap(&l).unwrap()] {
            let u = dense_unitary_of_circuit(plan.circuit(), l.total_qubits()).unwrap();
            assert!(u.unitarity_error().unwrap() <= 1e-12, "dims {dims:?}");
        }
    }
}

#[test]
fn batched_one_qubit_transforms_halves_independently() {
    let l = layout(&[4]);
    let plan = batched_mdqft(&l, 1).unwrap();
    let first = test_array(&[4]);
    let second = MdArray::new(l.clone(), first.data().iter().map(|v| v * Complex64::new(0.3, -1.1) + 0.5).collect()).unwrap();
    let stacked: Vec<Complex64> = first.data().iter().chain(second.data()).copied().collect();
    let norm = mdqft::norm(&stacked);
    let mut state = Statevector::from_amplitudes(stacked.iter().map(|v| v / norm).collect()).unwrap();
    apply_circuit(&mut state, plan.circuit()).unwrap();
    for (half, source) in [first, second].iter().enumerate() {
        let spectrum = md_dft(source, DftEngine::Naive).unwrap();
        let block = &state.amplitudes()[half * 4..half * 4 + 4];
        for (amp, expected) in block.iter().zip(spectrum.data()) {
            // Per block, classical scale is ‖stacked‖·√4.
            assert!((amp * norm * 2.0 - expected).norm() < 1e-12);
        }
    }
}

#[test]
fn batched_unitary_is_block_diagonal() {
    for (dims, b) in [(vec![2], 2), (vec![4, 2], 1), (vec![2, 2], 2)] {
        let l = layout(&dims);
        let q = l.total_qubits();
        let u = dense_unitary_of_circuit(batched_mdqft(&l, b).unwrap().circuit(), q + b).unwrap();
        let single = dense_unitary_of_circuit(mdqft(&l).unwrap().circuit(), q).unwrap();
        let expected = kron(&identity(1 << b), &single).unwrap();
        assert!(u.max_abs_diff(&expected) <= 1e-12);
    }
}

#[test]
fn swap_elision_reorders_to_same_amplitudes() {
    for dims in [vec![4], vec![8, 8], vec![2, 16, 4]] {
        let a = test_array(&dims);
        let with = run_mdqft(&a, RunOptions { no_swap: false }).unwrap();
        let without = run_mdqft(&a, RunOptions { no_swap: true }).unwrap();
        assert!(without.ordered_state().max_abs_diff(&with.state) < 1e-13);
        assert!(without.plan.unorder_state(&without.ordered_state()).max_abs_diff(&without.state) == 0.0);
    }
}

#[test]
fn quantum_matches_oracle_on_4x4x4() {
    let a = test_array(&[4, 4, 4]);
    let run = run_mdqft(&a, RunOptions::default()).unwrap();
    let quantum = decode(&run.ordered_state(), run.norm_factor, a.layout(), ScaleConvention::Classical).unwrap();
    for engine in [DftEngine::Naive, DftEngine::Fft] {
        let reference = md_dft(&a, engine).unwrap();
        assert!(compare_spectra(&quantum, &reference, 1e-9, 1e-9).unwrap().pass);
    }
}

#[test]
fn image_pipeline_matches_oracle() {
    let image = mdqft::experiment::example_image();
    let (state, factor) = encode(&image).unwrap();
    assert_eq!(factor, 4.0);
    assert!(state.amplitudes().iter().all(|a| a.norm() == 0.0 || (a.norm() - 0.25).abs() < 1e-16));

    let run = run_mdqft(&image, RunOptions::default()).unwrap();
    let probs = probabilities(&run.state);
    let support: Vec<usize> = (0..64).filter(|&i| probs[i] > 1e-12).collect();
    assert_eq!(support, vec![18, 22, 50, 54]);
    assert!(support.iter().all(|&i| (probs[i] - 0.25).abs() < 1e-12));

    let quantum = decode(&run.state, run.norm_factor, image.layout(), ScaleConvention::Classical).unwrap();
    let reference = md_dft(&image, DftEngine::Naive).unwrap();
    assert!(compare_spectra(&quantum, &reference, 1e-10, 0.0).unwrap().pass);
}

#[test]
fn compose_matches_matrix_product() {
    let l = layout(&[4, 2]);
    let a = mdqft(&l).unwrap().circuit().clone();
    let b = mdqft::experiment::example_init_circuit();
    let b = mdqft::Circuit::from_gates(3, b.gates().iter().filter(|g| g.max_qubit() < 3).copied()).unwrap();
    let ua = dense_unitary_of_circuit(&a, 3).unwrap();
    let ub = dense_unitary_of_circuit(&b, 3).unwrap();
    let uab = dense_unitary_of_circuit(&a.compose(&b).unwrap(), 3).unwrap();
    assert!(uab.max_abs_diff(&ub.matmul(&ua).unwrap()) < 1e-12);
    let round = dense_unitary_of_circuit(&a.compose(&a.adjoint()).unwrap(), 3).unwrap();
    assert!(round.max_abs_diff(&identity(8)) < 1e-14);
}
