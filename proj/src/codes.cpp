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

#include "codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hamiltonians.hpp"

namespace iondfs {

std::optional<CodeName> code_name_from_string(std::string_view s) {
  if (s == "CI") return CodeName::c_one;
  if (s == "CII") return CodeName::c_two;
  if (s == "PAIR") return CodeName::pair_dfs;
  if (s == "QUBIT_CI") return CodeName::qubit_in_c_one;
  return std::nullopt;
}

const char* code_name_to_string(CodeName name) {
  switch (name) {
    case CodeName::c_one: return "CI";
    case CodeName::c_two: return "CII";
    case CodeName::pair_dfs: return "PAIR";
    case CodeName::qubit_in_c_one: return "QUBIT_CI";
  }
  return "?";
}

namespace {

int ket_to_index(const std::string& bits) {
  int idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      raise(ErrorCode::invalid_argument, "ket label must contain only 0 and 1: " + bits);
    idx = idx * 2 + (c == '1' ? 1 : 0);
  }
  return idx;
}

}  // namespace

CodeSpace make_code_space(int n_qubits, std::vector<std::string> kets) {
  if (n_qubits < 1 || n_qubits > max_qubits)
    raise(ErrorCode::invalid_argument, "make_code_space: unsupported qubit count");
  if (kets.empty()) raise(ErrorCode::invalid_argument, "make_code_space: empty ket list");

  CodeSpace code;
  code.n_qubits = n_qubits;
  const int dim = 1 << n_qubits;
  code.projector = ComplexMatrix::zero(dim, dim);
  std::set<int> seen;
  for (const std::string& ket : kets) {
    if (static_cast<int>(ket.size()) != n_qubits)
      raise(ErrorCode::invalid_argument, "make_code_space: ket length mismatch: " + ket);
    const int idx = ket_to_index(ket);
    if (!seen.insert(idx).second)
      raise(ErrorCode::invalid_argument, "make_code_space: duplicate ket: " + ket);
    code.basis_indices.push_back(idx);
    code.projector(idx, idx) = 1.0;
  }
  code.basis_kets = std::move(kets);
  return code;
}

CodeSpace standard_code(CodeName name) {
  switch (name) {
    case CodeName::c_one:
      return make_code_space(3, {"001", "010", "100"});
    case CodeName::c_two:
      return make_code_space(3, {"110", "101", "011"});
    case CodeName::pair_dfs:
      return make_code_space(2, {"01", "10"});
    case CodeName::qubit_in_c_one:
      return make_code_space(3, {"001", "010"});
  }
  raise(ErrorCode::unknown_code, "standard_code: unknown code name");
}

ComplexMatrix basis_ket(const std::string& bits) {
  if (bits.empty() || static_cast<int>(bits.size()) > max_qubits)
    raise(ErrorCode::invalid_argument, "basis_ket: unsupported qubit count");
  const int dim = 1 << bits.size();
  ComplexMatrix psi(dim, 1);
  psi(ket_to_index(bits), 0) = 1.0;
  return psi;
}

ComplexMatrix density_from_ket(const ComplexMatrix& psi) {
  if (psi.cols != 1) raise(ErrorCode::dimension_mismatch, "density_from_ket: expected a column vector");
  return psi * adjoint(psi);
}

double leakage(const ComplexMatrix& rho, const CodeSpace& code) {
  if (!rho.is_square() || rho.rows != code.projector.rows)
    raise(ErrorCode::dimension_mismatch, "leakage: state dimension does not match the code");
  double in_code = 0.0;
  for (int idx : code.basis_indices) in_code += rho(idx, idx).real();
  double value = 1.0 - in_code;
  if (value < -1e-10 || value > 1.0 + 1e-10)
    raise(ErrorCode::numerical_failure,
          "leakage: population " + std::to_string(value) + " outside [0,1] beyond roundoff");
  return std::clamp(value, 0.0, 1.0);
}

ComplexMatrix project_operator(const ComplexMatrix& h, const CodeSpace& code) {
  if (!h.is_square() || h.rows != code.projector.rows)
    raise(ErrorCode::dimension_mismatch, "project_operator: operator dimension does not match the code");
  const int k = code.dimension();
  ComplexMatrix out(k, k);
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) out(r, s) = h(code.basis_indices[r], code.basis_indices[s]);
  return out;
}

double dephasing_invariance_check(const CodeSpace& code, double phi) {
  const ComplexMatrix sz = collective_sz(code.n_qubits);
  const int dim = sz.rows;
  std::vector<Complex> phase(dim);
  for (int d = 0; d < dim; ++d) phase[d] = std::polar(1.0, -phi * sz(d, d).real());

  const int k = code.dimension();
  double worst = 0.0;
  auto probe = [&](const ComplexMatrix& rho) {
    double err = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s)
        err = std::max(err, std::abs(rho(r, s) * phase[r] * std::conj(phase[s]) - rho(r, s)));
    worst = std::max(worst, err);
  };

  for (int r = 0; r < k; ++r) {
    ComplexMatrix rho(dim, dim);
    rho(code.basis_indices[r], code.basis_indices[r]) = 1.0;
    probe(rho);
  }
  for (int r = 0; r < k; ++r) {
    for (int s = r + 1; s < k; ++s) {
      ComplexMatrix rho(dim, dim);
      const int ir = code.basis_indices[r], is = code.basis_indices[s];
      rho(ir, ir) = 0.5;
      rho(is, is) = 0.5;
      rho(ir, is) = 0.5;
      rho(is, ir) = 0.5;
      probe(rho);
    }
  }
  return worst;
}

}  // namespace iondfs
