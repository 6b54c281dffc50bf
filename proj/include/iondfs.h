/* Copyright 2026 The iondfs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* iondfs: simulator for encoded qubits protected against collective
 * dephasing, driven by pairwise xx/yy exchange pulses.
 *
 * Every function returns an iondfs_status; results travel through out
 * parameters. On failure, iondfs_last_error() describes the problem for the
 * calling thread. Handles returned by this library must be released with the
 * matching _free function. All functions are thread-safe: the library keeps
 * no mutable global state besides the per-thread error message.
 */

#ifndef IONDFS_H_
#define IONDFS_H_

#include <stddef.h>

#if defined(_WIN32)
#define IONDFS_API __declspec(dllexport)
#else
#define IONDFS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iondfs_status {
  IONDFS_OK = 0,
  IONDFS_ERR_INVALID_ARGUMENT = 1,
  IONDFS_ERR_INDEX_OUT_OF_RANGE = 2,
  IONDFS_ERR_SAME_QUBIT = 3,
  IONDFS_ERR_DIMENSION_MISMATCH = 4,
  IONDFS_ERR_NOT_HERMITIAN = 5,
  IONDFS_ERR_NOT_PSD = 6,
  IONDFS_ERR_UNKNOWN_CODE = 7,
  IONDFS_ERR_STEP_TOO_LARGE = 8,
  IONDFS_ERR_INSUFFICIENT_POINTS = 9,
  IONDFS_ERR_NON_POSITIVE_VALUE = 10,
  IONDFS_ERR_EMPTY_GENERATORS = 11,
  IONDFS_ERR_CODE_DIMENSION_UNSUPPORTED = 12,
  IONDFS_ERR_CLOSURE_ITERATION_LIMIT = 13,
  IONDFS_ERR_ZERO_DETUNING = 14,
  IONDFS_ERR_NUMERICAL_FAILURE = 15,
  IONDFS_ERR_IO = 16,
  IONDFS_ERR_NULL_POINTER = 17,
  IONDFS_ERR_BUFFER_TOO_SMALL = 18,
  IONDFS_ERR_INTERNAL = 19
} iondfs_status;

/* Version string of the library, e.g. "1.0.0". */
IONDFS_API const char* iondfs_version(void);

/* Stable name for a status value, e.g. "IONDFS_ERR_NOT_PSD". */
IONDFS_API const char* iondfs_status_name(int status);

/* Message for the most recent failure on the calling thread; empty string if
 * none. The pointer stays valid until the next failing call on the thread. */
IONDFS_API const char* iondfs_last_error(void);

/* ------------------------------------------------------------------ */
/* Alternation experiment                                              */
/* ------------------------------------------------------------------ */

typedef struct iondfs_experiment iondfs_experiment;

/* Runs the pulse-alternation experiment: 2n segments alternating the xx and
 * yy couplings on the given pair (xx first), each of duration total_time/n,
 * integrated under the Lindblad equation with the single collective
 * dephasing jump (sum of sz) at rate gamma, and scored against the ideal
 * closed XY evolution of the initial state.
 *
 * code_name:  "CI", "CII", "PAIR", or "QUBIT_CI".
 * state_name: a ket bitstring of matching length (e.g. "001"), or "plus"
 *             for the balanced superposition of the code's first two kets.
 * steps_per_segment: RK4 steps per pulse segment, >= 1 (200 is the
 *             validated default).
 *
 * On success *out owns the result; release it with iondfs_experiment_free. */
IONDFS_API int iondfs_alternation_run(int n, double gamma, double g, double total_time,
                                      int pair_i, int pair_j, const char* code_name,
                                      const char* state_name, int steps_per_segment,
                                      iondfs_experiment** out);

IONDFS_API void iondfs_experiment_free(iondfs_experiment* experiment);

/* Number of recorded samples (RK4 steps + 1; the series includes t = 0). */
IONDFS_API int iondfs_experiment_sample_count(const iondfs_experiment* experiment, size_t* out);

/* Copies the time/leakage series into caller buffers of capacity `capacity`
 * doubles; fails with IONDFS_ERR_BUFFER_TOO_SMALL if capacity is less than
 * the sample count. */
IONDFS_API int iondfs_experiment_times(const iondfs_experiment* experiment, double* buffer,
                                       size_t capacity);
IONDFS_API int iondfs_experiment_leakage(const iondfs_experiment* experiment, double* buffer,
                                         size_t capacity);

/* Uhlmann fidelity of the final state against the ideal closed evolution. */
IONDFS_API int iondfs_experiment_fidelity(const iondfs_experiment* experiment, double* out);

/* Trapezoid integral of the leakage series over the full run. */
IONDFS_API int iondfs_experiment_integrated_leakage(const iondfs_experiment* experiment,
                                                    double* out);

/* ------------------------------------------------------------------ */
/* Encoded-universality check                                          */
/* ------------------------------------------------------------------ */

/* Lie closure of the XY couplings projected onto a 3-dimensional code.
 * pairs_flat holds n_pairs (i,j) pairs as 2*n_pairs ints. On success
 * *out_dimension is the closure dimension and *out_universal is 1 iff the
 * closure is all of su(3) (dimension 8). Either out pointer may be NULL. */
IONDFS_API int iondfs_closure_check(const char* code_name, const int* pairs_flat, size_t n_pairs,
                                    int* out_dimension, int* out_universal);

/* ------------------------------------------------------------------ */
/* Analysis helpers                                                    */
/* ------------------------------------------------------------------ */

/* Least squares of log(value) on log(n) over points with n >= n_min;
 * requires at least 4 such points with positive values. Any out pointer may
 * be NULL. */
IONDFS_API int iondfs_fit_power_law(const int* ns, const double* values, size_t count, int n_min,
                                    double* out_exponent, double* out_log_prefactor,
                                    double* out_residual);

/* Closed-form leakage model at unit coupling: sin^2(t). */
IONDFS_API int iondfs_analytic_leakage(double t, double* out);

/* P(t) = t - sin(2t)/2, the leakage integral over one xx+yy pair. */
IONDFS_API int iondfs_analytic_integrated_population(double t, double* out);

/* n P(T/n) = T - (n/2) sin(2T/n); falls off as (2/3) T^3 / n^2. */
IONDFS_API int iondfs_analytic_total_population(double total_time, int n, double* out);

/* ------------------------------------------------------------------ */
/* Physical-parameter helpers                                          */
/* ------------------------------------------------------------------ */

/* eta = sqrt(hbar / (2 N M omega)) * (1/lambda) * cos(theta), SI inputs. */
IONDFS_API int iondfs_lamb_dicke(int ion_count, double ion_mass_kg, double trap_frequency_rad_s,
                                 double drive_wavelength_m, double beam_angle_rad, double* out);

/* g = eta^2 Omega^2 / Delta. */
IONDFS_API int iondfs_coupling_strength(double lamb_dicke, double rabi_frequency, double detuning,
                                        double* out);

#ifdef __cplusplus
}
#endif

#endif /* IONDFS_H_ */
