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

//! C ABI for the mdqft simulator.
//!
//! Every function returns an [`MdqftStatus`]; results come back through out
//! parameters. Objects cross the boundary as opaque handles that the caller
//! releases with the matching `*_free` function. Complex buffers are
//! interleaved `re, im` doubles, flat with dimension 1 fastest.
//!
//! On failure a message is kept per thread and can be read with
//! [`mdqft_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mdqft::{
    decode, md_dft, mdqft as build_mdqft, mdqft_no_swap, probabilities, run_mdqft, sample, ArrayLayout,
    Complex64, DftEngine, Error, MdArray, MdqftRun, RunOptions, ScaleConvention,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdqftStatus {
    Ok = 0,
    NullPointer = 1,
    Validation = 2,
    Capacity = 3,
    Bounds = 4,
    /// All-zero input that cannot be normalized.
    Degenerate = 5,
    Layout = 6,
    Io = 7,
    /// Output buffer length does not match the result.
    BufferSize = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdqftConvention {
    Raw = 0,
    Classical = 1,
    Unitary = 2,
}

impl From<MdqftConvention> for ScaleConvention {
    fn from(c: MdqftConvention) -> Self {
        match c {
            MdqftConvention::Raw => ScaleConvention::Raw,
            MdqftConvention::Classical => ScaleConvention::Classical,
            MdqftConvention::Unitary => ScaleConvention::Unitary,
        }
    }
}

/// Opaque d-dimensional complex array.
pub struct MdqftArray(MdArray);

/// Opaque result of a transform: output state, circuit plan and input norm.
pub struct MdqftResult(MdqftRun);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn status_of(error: &Error) -> MdqftStatus {
    match error {
        Error::Capacity(_) => MdqftStatus::Capacity,
        Error::Bounds(_) => MdqftStatus::Bounds,
        Error::Validation(_) => MdqftStatus::Validation,
        Error::Degenerate(_) => MdqftStatus::Degenerate,
        Error::Layout(_) => MdqftStatus::Layout,
        Error::Io(_) => MdqftStatus::Io,
    }
}

struct Failure(MdqftStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(MdqftStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> MdqftStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MdqftStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("panic inside mdqft".into());
            MdqftStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

unsafe fn slice_mut<'a, T>(ptr: *mut T, len: usize, what: &str) -> Result<&'a mut [T], Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts_mut(ptr, len))
}

fn expect_len(actual: usize, expected: usize, what: &str) -> Result<(), Failure> {
    if actual != expected {
        return Err(Failure(
            MdqftStatus::BufferSize,
            format!("{what} has length {actual}, expected {expected}"),
        ));
    }
    Ok(())
}

fn write_interleaved(values: &[Complex64], out: &mut [f64]) {
    for (pair, v) in out.chunks_exact_mut(2).zip(values) {
        pair[0] = v.re;
        pair[1] = v.im;
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mdqft_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds an array from `ndim` extents and `2·M` interleaved doubles.
///
/// # Safety
/// `dims` must point to `ndim` values, `data` to `data_len` doubles, and
/// `out` to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn mdqft_array_new(
    dims: *const usize,
    ndim: usize,
    data: *const f64,
    data_len: usize,
    out: *mut *mut MdqftArray,
) -> MdqftStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let layout = ArrayLayout::new(slice(dims, ndim, "dims")?.to_vec())?;
        let data = slice(data, data_len, "data")?;
        expect_len(data_len, 2 * layout.total_elements(), "data")?;
        let values = data.chunks_exact(2).map(|p| Complex64::new(p[0], p[1])).collect();
        let array = MdArray::new(layout, values)?;
        *out = Box::into_raw(Box::new(MdqftArray(array)));
        Ok(())
    })
}

/// # Safety
/// `array` must be null or a handle from [`mdqft_array_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mdqft_array_free(array: *mut MdqftArray) {
    if !array.is_null() {
        drop(Box::from_raw(array));
    }
}

/// Number of elements `M`, or 0 for a null handle.
///
/// # Safety
/// `array` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mdqft_array_len(array: *const MdqftArray) -> usize {
    array.as_ref().map_or(0, |a| a.0.data().len())
}

/// Classical reference transform (row-column radix-2 FFT, `e^{+2πi/N}`),
/// written as `2·M` interleaved doubles.
///
/// # Safety
/// `array` must be a live handle and `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn mdqft_classical_dft(
    array: *const MdqftArray,
    out: *mut f64,
    out_len: usize,
) -> MdqftStatus {
    guard(|| {
        let array = array.as_ref().ok_or_else(|| null("array"))?;
        expect_len(out_len, 2 * array.0.data().len(), "out")?;
        let out = slice_mut(out, out_len, "out")?;
        let spectrum = md_dft(&array.0, DftEngine::Fft)?;
        write_interleaved(spectrum.data(), out);
        Ok(())
    })
}

/// Encodes `array` and simulates the multidimensional QFT on it.
///
/// # Safety
/// `array` must be a live handle and `out` writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn mdqft_transform(
    array: *const MdqftArray,
    no_swap: bool,
    out: *mut *mut MdqftResult,
) -> MdqftStatus {
    guard(|| {
        let array = array.as_ref().ok_or_else(|| null("array"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let run = run_mdqft(&array.0, RunOptions { no_swap })?;
        *out = Box::into_raw(Box::new(MdqftResult(run)));
        Ok(())
    })
}

/// # Safety
/// `result` must be null or a handle from [`mdqft_transform`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_free(result: *mut MdqftResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Qubits in the output state, or 0 for a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_num_qubits(result: *const MdqftResult) -> usize {
    result.as_ref().map_or(0, |r| r.0.state.num_qubits())
}

/// Euclidean norm of the input array, or 0 for a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_norm_factor(result: *const MdqftResult) -> f64 {
    result.as_ref().map_or(0.0, |r| r.0.norm_factor)
}

/// Spectrum in transform order and the chosen scale, as `2·M` interleaved doubles.
///
/// # Safety
/// `result` must be a live handle and `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_spectrum(
    result: *const MdqftResult,
    convention: MdqftConvention,
    out: *mut f64,
    out_len: usize,
) -> MdqftStatus {
    guard(|| {
        let run = &result.as_ref().ok_or_else(|| null("result"))?.0;
        expect_len(out_len, 2 * run.state.len(), "out")?;
        let out = slice_mut(out, out_len, "out")?;
        let spectrum = decode(&run.ordered_state(), run.norm_factor, run.plan.layout(), convention.into())?;
        write_interleaved(spectrum.data(), out);
        Ok(())
    })
}

/// Outcome probabilities in transform order, `M` doubles.
///
/// # Safety
/// `result` must be a live handle and `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_probabilities(
    result: *const MdqftResult,
    out: *mut f64,
    out_len: usize,
) -> MdqftStatus {
    guard(|| {
        let run = &result.as_ref().ok_or_else(|| null("result"))?.0;
        expect_len(out_len, run.state.len(), "out")?;
        slice_mut(out, out_len, "out")?.copy_from_slice(&probabilities(&run.ordered_state()));
        Ok(())
    })
}

/// Draws `shots` seeded samples and writes per-outcome counts (`M` entries,
/// transform order).
///
/// # Safety
/// `result` must be a live handle and `counts` must hold `counts_len` values.
#[no_mangle]
pub unsafe extern "C" fn mdqft_result_sample(
    result: *const MdqftResult,
    shots: u64,
    seed: u64,
    counts: *mut u64,
    counts_len: usize,
) -> MdqftStatus {
    guard(|| {
        let run = &result.as_ref().ok_or_else(|| null("result"))?.0;
        expect_len(counts_len, run.state.len(), "counts")?;
        let counts = slice_mut(counts, counts_len, "counts")?;
        let histogram = sample(&run.ordered_state(), shots, seed)?;
        counts.fill(0);
        for (&outcome, &count) in histogram.counts() {
            counts[outcome] = count;
        }
        Ok(())
    })
}

/// OpenQASM 2.0 text of the transform circuit for `dims`. Release the string
/// with [`mdqft_string_free`].
///
/// # Safety
/// `dims` must point to `ndim` values and `out` to storage for one pointer.
#[no_mangle]
pub unsafe extern "C" fn mdqft_export_qasm(
    dims: *const usize,
    ndim: usize,
    no_swap: bool,
    out: *mut *mut c_char,
) -> MdqftStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let layout = ArrayLayout::new(slice(dims, ndim, "dims")?.to_vec())?;
        let plan = if no_swap { mdqft_no_swap(&layout)? } else { build_mdqft(&layout)? };
        let text = CString::new(plan.circuit().export_qasm()).expect("QASM has no NUL bytes");
        *out = text.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mdqft_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Reads the last error as an owned Rust string (test helper).
#[doc(hidden)]
pub fn last_error() -> Option<String> {
    let p = mdqft_last_error_message();
    if p.is_null() {
        None
    } else {
        Some(unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
    }
}
