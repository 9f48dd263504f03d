#ifndef MDQFT_H
#define MDQFT_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum {
  MDQFT_STATUS_OK = 0,
  MDQFT_STATUS_NULL_POINTER = 1,
  MDQFT_STATUS_VALIDATION = 2,
  MDQFT_STATUS_CAPACITY = 3,
  MDQFT_STATUS_BOUNDS = 4,
  // All-zero input that cannot be normalized.
  MDQFT_STATUS_DEGENERATE = 5,
  MDQFT_STATUS_LAYOUT = 6,
  MDQFT_STATUS_IO = 7,
  // Output buffer length does not match the result.
  MDQFT_STATUS_BUFFER_SIZE = 8,
  MDQFT_STATUS_PANIC = 9,
} MdqftStatus;

typedef enum {
  MDQFT_CONVENTION_RAW = 0,
  MDQFT_CONVENTION_CLASSICAL = 1,
  MDQFT_CONVENTION_UNITARY = 2,
} MdqftConvention;

// Opaque d-dimensional complex array.
typedef struct MdqftArray MdqftArray;

// Opaque result of a transform: output state, circuit plan and input norm.
typedef struct MdqftResult MdqftResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next failing call on the same thread.
const char *mdqft_last_error_message(void);

// Builds an array from `ndim` extents and `2·M` interleaved doubles.
//
// # Safety
// `dims` must point to `ndim` values, `data` to `data_len` doubles, and
// `out` to writable storage for one handle.
MdqftStatus mdqft_array_new(const size_t *dims,
                            size_t ndim,
                            const double *data,
                            size_t data_len,
                            MdqftArray **out);

// # Safety
// `array` must be null or a handle from [`mdqft_array_new`] not yet freed.
void mdqft_array_free(MdqftArray *array);

// Number of elements `M`, or 0 for a null handle.
//
// # Safety
// `array` must be null or a live handle.
size_t mdqft_array_len(const MdqftArray *array);

// Classical reference transform (row-column radix-2 FFT, `e^{+2πi/N}`),
// written as `2·M` interleaved doubles.
//
// # Safety
// `array` must be a live handle and `out` must hold `out_len` doubles.
MdqftStatus mdqft_classical_dft(const MdqftArray *array, double *out, size_t out_len);

// Encodes `array` and simulates the multidimensional QFT on it.
//
// # Safety
// `array` must be a live handle and `out` writable storage for one handle.
MdqftStatus mdqft_transform(const MdqftArray *array, bool no_swap, MdqftResult **out);

// # Safety
// `result` must be null or a handle from [`mdqft_transform`] not yet freed.
void mdqft_result_free(MdqftResult *result);

// Qubits in the output state, or 0 for a null handle.
//
// # Safety
// `result` must be null or a live handle.
size_t mdqft_result_num_qubits(const MdqftResult *result);

// Euclidean norm of the input array, or 0 for a null handle.
//
// # Safety
// `result` must be null or a live handle.
double mdqft_result_norm_factor(const MdqftResult *result);

// Spectrum in transform order and the chosen scale, as `2·M` interleaved doubles.
//
// # Safety
// `result` must be a live handle and `out` must hold `out_len` doubles.
MdqftStatus mdqft_result_spectrum(const MdqftResult *result,
                                  MdqftConvention convention,
                                  double *out,
                                  size_t out_len);

// Outcome probabilities in transform order, `M` doubles.
//
// # Safety
// `result` must be a live handle and `out` must hold `out_len` doubles.
MdqftStatus mdqft_result_probabilities(const MdqftResult *result, double *out, size_t out_len);

// Draws `shots` seeded samples and writes per-outcome counts (`M` entries,
// transform order).
//
// # Safety
// `result` must be a live handle and `counts` must hold `counts_len` values.
MdqftStatus mdqft_result_sample(const MdqftResult *result,
                                uint64_t shots,
                                uint64_t seed,
                                uint64_t *counts,
                                size_t counts_len);

// OpenQASM 2.0 text of the transform circuit for `dims`. Release the string
// with [`mdqft_string_free`].
//
// # Safety
// `dims` must point to `ndim` values and `out` to storage for one pointer.
MdqftStatus mdqft_export_qasm(const size_t *dims, size_t ndim, bool no_swap, char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void mdqft_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MDQFT_H */
