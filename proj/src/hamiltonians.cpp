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

#include "hamiltonians.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace iondfs {

namespace {

void require_qubit_range(int qubit_index, int n_qubits, const char* op) {
  if (n_qubits < 1 || n_qubits > max_qubits)
    raise(ErrorCode::index_out_of_range,
          std::string(op) + ": n_qubits must be in [1, " + std::to_string(max_qubits) + "]");
  if (qubit_index < 0 || qubit_index >= n_qubits)
    raise(ErrorCode::index_out_of_range,
          std::string(op) + ": qubit index " + std::to_string(qubit_index) + " out of range");
}

}  // namespace

ComplexMatrix pauli(PauliAxis axis, int qubit_index, int n_qubits) {
  require_qubit_range(qubit_index, n_qubits, "pauli");
  const int dim = 1 << n_qubits;
  const unsigned mask = 1u << (n_qubits - 1 - qubit_index);
  ComplexMatrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const bool bit_set = (static_cast<unsigned>(col) & mask) != 0;
    switch (axis) {
      case PauliAxis::x:
        m(col ^ static_cast<int>(mask), col) = 1.0;
        break;
      case PauliAxis::y:
        // sy|0> = i|1>, sy|1> = -i|0>
        m(col ^ static_cast<int>(mask), col) = bit_set ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        break;
      case PauliAxis::z:
        m(col, col) = bit_set ? -1.0 : 1.0;
        break;
    }
  }
  return m;
}

ComplexMatrix collective_sz(int n_qubits) {
  require_qubit_range(0, n_qubits, "collective_sz");
  const int dim = 1 << n_qubits;
  ComplexMatrix m(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const int ones = std::popcount(static_cast<unsigned>(b));
    m(b, b) = static_cast<double>(n_qubits - 2 * ones);
  }
  return m;
}

namespace {

ComplexMatrix pairwise(PauliAxis axis, int i, int j, double g, int n_qubits, const char* op) {
  require_qubit_range(i, n_qubits, op);
  require_qubit_range(j, n_qubits, op);
  if (i == j) raise(ErrorCode::same_qubit, std::string(op) + ": the two qubits must differ");
  return g * (pauli(axis, i, n_qubits) * pauli(axis, j, n_qubits));
}

}  // namespace

ComplexMatrix h_xx(int i, int j, double g, int n_qubits) {
  return pairwise(PauliAxis::x, i, j, g, n_qubits, "h_xx");
}

ComplexMatrix h_yy(int i, int j, double g, int n_qubits) {
  return pairwise(PauliAxis::y, i, j, g, n_qubits, "h_yy");
}

ComplexMatrix h_xy(int i, int j, double g, int n_qubits) {
  return h_xx(i, j, g, n_qubits) + h_yy(i, j, g, n_qubits);
}

double lamb_dicke(const TrapParameters& trap) {
  if (trap.ion_count < 1) raise(ErrorCode::invalid_argument, "lamb_dicke: ion_count must be >= 1");
  if (trap.ion_mass <= 0.0) raise(ErrorCode::invalid_argument, "lamb_dicke: ion_mass must be > 0");
  if (trap.trap_frequency <= 0.0)
    raise(ErrorCode::invalid_argument, "lamb_dicke: trap_frequency must be > 0");
  if (trap.drive_wavelength <= 0.0)
    raise(ErrorCode::invalid_argument, "lamb_dicke: drive_wavelength must be > 0");
  const double zp_width =
      std::sqrt(hbar_si / (2.0 * trap.ion_count * trap.ion_mass * trap.trap_frequency));
  return zp_width / trap.drive_wavelength * std::cos(trap.beam_angle);
}

double coupling_strength(const PulseParameters& p) {
  if (p.detuning == 0.0) raise(ErrorCode::zero_detuning, "coupling_strength: detuning must be nonzero");
  return p.lamb_dicke * p.lamb_dicke * p.rabi_frequency * p.rabi_frequency / p.detuning;
}

}  // namespace iondfs
