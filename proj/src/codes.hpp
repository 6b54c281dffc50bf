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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace iondfs {

// A codespace is an explicit ordered list of computational-basis kets.
// Construction does not require a common dephasing eigenvalue: non-protected
// spans are legitimate inputs to the diagnostics (negative controls), so the
// protected property is checked, never assumed.
struct CodeSpace {
  int n_qubits = 0;
  std::vector<std::string> basis_kets;  // e.g. {"001", "010", "100"}
  std::vector<int> basis_indices;       // kets as basis indices, msb = qubit 0
  ComplexMatrix projector;

  int dimension() const { return static_cast<int>(basis_kets.size()); }
};

enum class CodeName {
  c_one,           // {|001>, |010>, |100>}, collective_sz eigenvalue +1
  c_two,           // {|110>, |101>, |011>}, collective_sz eigenvalue -1
  pair_dfs,        // {|01>, |10>}, eigenvalue 0
  qubit_in_c_one,  // {|001>, |010>}, the encoded qubit inside c_one
};

// CLI-facing names: "CI", "CII", "PAIR", "QUBIT_CI".
std::optional<CodeName> code_name_from_string(std::string_view s);
const char* code_name_to_string(CodeName name);

CodeSpace make_code_space(int n_qubits, std::vector<std::string> kets);
CodeSpace standard_code(CodeName name);

// Column vector |bits>; bit order matches pauli() (leftmost char = qubit 0).
ComplexMatrix basis_ket(const std::string& bits);
ComplexMatrix density_from_ket(const ComplexMatrix& psi);

// 1 - tr(P rho), clamped to [0,1] against roundoff; values outside
// [-1e-10, 1+1e-10] indicate integrator failure and raise.
double leakage(const ComplexMatrix& rho, const CodeSpace& code);

// The k x k block <b_r| H |b_s> over the code basis, in listing order.
ComplexMatrix project_operator(const ComplexMatrix& h, const CodeSpace& code);

// Max change of any code-supported probe state under the collective phase
// shift exp(-i phi Sz). Probes cover basis densities and all pairwise
// superpositions; diagonal-only probes would miss relative-phase errors.
double dephasing_invariance_check(const CodeSpace& code, double phi);

}  // namespace iondfs
