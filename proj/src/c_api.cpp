// Copyright 2026 The iondfs Authors
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

#include "iondfs.h"

#include <cstring>
#include <exception>
#include <string>

#include "analysis.hpp"
#include "codes.hpp"
#include "dynamics.hpp"
#include "hamiltonians.hpp"
#include "universality.hpp"

namespace {

thread_local std::string g_last_error;

int status_from(iondfs::ErrorCode code) {
  using iondfs::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return IONDFS_ERR_INVALID_ARGUMENT;
    case ErrorCode::index_out_of_range: return IONDFS_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::same_qubit: return IONDFS_ERR_SAME_QUBIT;
    case ErrorCode::dimension_mismatch: return IONDFS_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_hermitian: return IONDFS_ERR_NOT_HERMITIAN;
    case ErrorCode::not_psd: return IONDFS_ERR_NOT_PSD;
    case ErrorCode::unknown_code: return IONDFS_ERR_UNKNOWN_CODE;
    case ErrorCode::step_too_large: return IONDFS_ERR_STEP_TOO_LARGE;
    case ErrorCode::insufficient_points: return IONDFS_ERR_INSUFFICIENT_POINTS;
    case ErrorCode::non_positive_value: return IONDFS_ERR_NON_POSITIVE_VALUE;
    case ErrorCode::empty_generators: return IONDFS_ERR_EMPTY_GENERATORS;
    case ErrorCode::code_dimension_unsupported: return IONDFS_ERR_CODE_DIMENSION_UNSUPPORTED;
    case ErrorCode::closure_iteration_limit: return IONDFS_ERR_CLOSURE_ITERATION_LIMIT;
    case ErrorCode::zero_detuning: return IONDFS_ERR_ZERO_DETUNING;
    case ErrorCode::numerical_failure: return IONDFS_ERR_NUMERICAL_FAILURE;
    case ErrorCode::io_error: return IONDFS_ERR_IO;
  }
  return IONDFS_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return IONDFS_OK;
  } catch (const iondfs::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return IONDFS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return IONDFS_ERR_INTERNAL;
  }
}

int fail_null(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return IONDFS_ERR_NULL_POINTER;
}

iondfs::CodeSpace code_from_name(const char* code_name) {
  const auto name = iondfs::code_name_from_string(code_name);
  if (!name)
    iondfs::raise(iondfs::ErrorCode::unknown_code,
                  "unknown code name '" + std::string(code_name) +
                      "' (expected CI, CII, PAIR, or QUBIT_CI)");
  return iondfs::standard_code(*name);
}

iondfs::ComplexMatrix initial_density(const iondfs::CodeSpace& code, const char* state_name) {
  const std::string state = state_name;
  if (state == "plus") {
    if (code.dimension() < 2)
      iondfs::raise(iondfs::ErrorCode::invalid_argument,
                    "state 'plus' needs a code with at least two kets");
    iondfs::ComplexMatrix psi =
        iondfs::basis_ket(code.basis_kets[0]) + iondfs::basis_ket(code.basis_kets[1]);
    psi = (1.0 / std::sqrt(2.0)) * psi;
    return iondfs::density_from_ket(psi);
  }
  if (static_cast<int>(state.size()) != code.n_qubits)
    iondfs::raise(iondfs::ErrorCode::invalid_argument,
                  "state '" + state + "' does not match the code's qubit count");
  return iondfs::density_from_ket(iondfs::basis_ket(state));
}

}  // namespace

struct iondfs_experiment {
  iondfs::ExperimentResult result;
};

extern "C" {

const char* iondfs_version(void) { return "1.0.0"; }

const char* iondfs_status_name(int status) {
  switch (status) {
    case IONDFS_OK: return "IONDFS_OK";
    case IONDFS_ERR_INVALID_ARGUMENT: return "IONDFS_ERR_INVALID_ARGUMENT";
    case IONDFS_ERR_INDEX_OUT_OF_RANGE: return "IONDFS_ERR_INDEX_OUT_OF_RANGE";
    case IONDFS_ERR_SAME_QUBIT: return "IONDFS_ERR_SAME_QUBIT";
    case IONDFS_ERR_DIMENSION_MISMATCH: return "IONDFS_ERR_DIMENSION_MISMATCH";
    case IONDFS_ERR_NOT_HERMITIAN: return "IONDFS_ERR_NOT_HERMITIAN";
    case IONDFS_ERR_NOT_PSD: return "IONDFS_ERR_NOT_PSD";
    case IONDFS_ERR_UNKNOWN_CODE: return "IONDFS_ERR_UNKNOWN_CODE";
    case IONDFS_ERR_STEP_TOO_LARGE: return "IONDFS_ERR_STEP_TOO_LARGE";
    case IONDFS_ERR_INSUFFICIENT_POINTS: return "IONDFS_ERR_INSUFFICIENT_POINTS";
    case IONDFS_ERR_NON_POSITIVE_VALUE: return "IONDFS_ERR_NON_POSITIVE_VALUE";
    case IONDFS_ERR_EMPTY_GENERATORS: return "IONDFS_ERR_EMPTY_GENERATORS";
    case IONDFS_ERR_CODE_DIMENSION_UNSUPPORTED: return "IONDFS_ERR_CODE_DIMENSION_UNSUPPORTED";
    case IONDFS_ERR_CLOSURE_ITERATION_LIMIT: return "IONDFS_ERR_CLOSURE_ITERATION_LIMIT";
    case IONDFS_ERR_ZERO_DETUNING: return "IONDFS_ERR_ZERO_DETUNING";
    case IONDFS_ERR_NUMERICAL_FAILURE: return "IONDFS_ERR_NUMERICAL_FAILURE";
    case IONDFS_ERR_IO: return "IONDFS_ERR_IO";
    case IONDFS_ERR_NULL_POINTER: return "IONDFS_ERR_NULL_POINTER";
    case IONDFS_ERR_BUFFER_TOO_SMALL: return "IONDFS_ERR_BUFFER_TOO_SMALL";
    case IONDFS_ERR_INTERNAL: return "IONDFS_ERR_INTERNAL";
  }
  return "IONDFS_ERR_UNKNOWN";
}

const char* iondfs_last_error(void) { return g_last_error.c_str(); }

int iondfs_alternation_run(int n, double gamma, double g, double total_time, int pair_i,
                           int pair_j, const char* code_name, const char* state_name,
                           int steps_per_segment, iondfs_experiment** out) {
  if (out == nullptr) return fail_null("out");
  if (code_name == nullptr) return fail_null("code_name");
  if (state_name == nullptr) return fail_null("state_name");
  *out = nullptr;
  return guarded([&] {
    if (steps_per_segment < 1)
      iondfs::raise(iondfs::ErrorCode::invalid_argument, "steps_per_segment must be >= 1");
    if (n < 1) iondfs::raise(iondfs::ErrorCode::invalid_argument, "n must be >= 1");
    if (total_time <= 0.0)
      iondfs::raise(iondfs::ErrorCode::invalid_argument, "total_time must be > 0");
    const iondfs::CodeSpace code = code_from_name(code_name);
    const iondfs::ComplexMatrix rho0 = initial_density(code, state_name);
    const double step = (total_time / n) / steps_per_segment;
    auto* handle = new iondfs_experiment{iondfs::run_alternation_experiment(
        n, gamma, g, total_time, rho0, pair_i, pair_j, code, step)};
    *out = handle;
  });
}

void iondfs_experiment_free(iondfs_experiment* experiment) { delete experiment; }

int iondfs_experiment_sample_count(const iondfs_experiment* experiment, size_t* out) {
  if (experiment == nullptr) return fail_null("experiment");
  if (out == nullptr) return fail_null("out");
  *out = experiment->result.times.size();
  return IONDFS_OK;
}

namespace {

int copy_series(const std::vector<double>& series, double* buffer, size_t capacity,
                const char* what) {
  if (buffer == nullptr) return fail_null(what);
  if (capacity < series.size()) {
    g_last_error = std::string(what) + ": buffer capacity " + std::to_string(capacity) +
                   " below sample count " + std::to_string(series.size());
    return IONDFS_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buffer, series.data(), series.size() * sizeof(double));
  return IONDFS_OK;
}

}  // namespace

int iondfs_experiment_times(const iondfs_experiment* experiment, double* buffer, size_t capacity) {
  if (experiment == nullptr) return fail_null("experiment");
  return copy_series(experiment->result.times, buffer, capacity, "times");
}

int iondfs_experiment_leakage(const iondfs_experiment* experiment, double* buffer,
                              size_t capacity) {
  if (experiment == nullptr) return fail_null("experiment");
  return copy_series(experiment->result.leakage_series, buffer, capacity, "leakage");
}

int iondfs_experiment_fidelity(const iondfs_experiment* experiment, double* out) {
  if (experiment == nullptr) return fail_null("experiment");
  if (out == nullptr) return fail_null("out");
  *out = experiment->result.fidelity_vs_target;
  return IONDFS_OK;
}

int iondfs_experiment_integrated_leakage(const iondfs_experiment* experiment, double* out) {
  if (experiment == nullptr) return fail_null("experiment");
  if (out == nullptr) return fail_null("out");
  *out = experiment->result.integrated_leakage;
  return IONDFS_OK;
}

int iondfs_closure_check(const char* code_name, const int* pairs_flat, size_t n_pairs,
                         int* out_dimension, int* out_universal) {
  if (code_name == nullptr) return fail_null("code_name");
  if (pairs_flat == nullptr && n_pairs > 0) return fail_null("pairs_flat");
  return guarded([&] {
    const iondfs::CodeSpace code = code_from_name(code_name);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n_pairs);
    for (size_t k = 0; k < n_pairs; ++k)
      pairs.emplace_back(pairs_flat[2 * k], pairs_flat[2 * k + 1]);
    const iondfs::LieClosureReport report = iondfs::check_encoded_universality(code, pairs);
    if (out_dimension != nullptr) *out_dimension = report.closure_dimension;
    if (out_universal != nullptr) *out_universal = iondfs::is_universal(report) ? 1 : 0;
  });
}

int iondfs_fit_power_law(const int* ns, const double* values, size_t count, int n_min,
                         double* out_exponent, double* out_log_prefactor, double* out_residual) {
  if (ns == nullptr) return fail_null("ns");
  if (values == nullptr) return fail_null("values");
  return guarded([&] {
    std::vector<std::pair<int, double>> points;
    points.reserve(count);
    for (size_t k = 0; k < count; ++k) points.emplace_back(ns[k], values[k]);
    const iondfs::PowerLawFit fit = iondfs::fit_power_law(points, n_min);
    if (out_exponent != nullptr) *out_exponent = fit.exponent;
    if (out_log_prefactor != nullptr) *out_log_prefactor = fit.log_prefactor;
    if (out_residual != nullptr) *out_residual = fit.residual;
  });
}

int iondfs_analytic_leakage(double t, double* out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = iondfs::analytic_leakage(t); });
}

int iondfs_analytic_integrated_population(double t, double* out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = iondfs::analytic_integrated_population(t); });
}

int iondfs_analytic_total_population(double total_time, int n, double* out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] { *out = iondfs::analytic_total_population(total_time, n); });
}

int iondfs_lamb_dicke(int ion_count, double ion_mass_kg, double trap_frequency_rad_s,
                      double drive_wavelength_m, double beam_angle_rad, double* out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = iondfs::lamb_dicke({ion_count, ion_mass_kg, trap_frequency_rad_s, drive_wavelength_m,
                               beam_angle_rad});
  });
}

int iondfs_coupling_strength(double lamb_dicke, double rabi_frequency, double detuning,
                             double* out) {
  if (out == nullptr) return fail_null("out");
  return guarded([&] {
    *out = iondfs::coupling_strength({rabi_frequency, lamb_dicke, detuning});
  });
}

}  // extern "C"
