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

#pragma once

#include <stdexcept>
#include <string>

namespace iondfs {

enum class ErrorCode {
  invalid_argument,
  index_out_of_range,
  same_qubit,
  dimension_mismatch,
  not_hermitian,
  not_psd,
  unknown_code,
  step_too_large,
  insufficient_points,
  non_positive_value,
  empty_generators,
  code_dimension_unsupported,
  closure_iteration_limit,
  zero_detuning,
  numerical_failure,
  io_error,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::same_qubit: return "same_qubit";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::not_psd: return "not_psd";
    case ErrorCode::unknown_code: return "unknown_code";
    case ErrorCode::step_too_large: return "step_too_large";
    case ErrorCode::insufficient_points: return "insufficient_points";
    case ErrorCode::non_positive_value: return "non_positive_value";
    case ErrorCode::empty_generators: return "empty_generators";
    case ErrorCode::code_dimension_unsupported: return "code_dimension_unsupported";
    case ErrorCode::closure_iteration_limit: return "closure_iteration_limit";
    case ErrorCode::zero_detuning: return "zero_detuning";
    case ErrorCode::numerical_failure: return "numerical_failure";
    case ErrorCode::io_error: return "io_error";
  }
  return "unknown";
}

// Single exception type for the whole library; the code tells callers (and the
// C wrapper) which contract was violated without a taxonomy of classes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace iondfs
