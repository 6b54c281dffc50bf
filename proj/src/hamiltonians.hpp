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

#include "linalg.hpp"

namespace iondfs {

// Effective pairwise drive: coupling g = eta^2 Omega^2 / Delta.
struct PulseParameters {
  double rabi_frequency = 0.0;  // Omega, angular frequency units
  double lamb_dicke = 0.0;      // eta, dimensionless
  double detuning = 0.0;        // Delta, angular frequency units, nonzero
};

struct TrapParameters {
  int ion_count = 1;              // N
  double ion_mass = 0.0;          // M, kg
  double trap_frequency = 0.0;    // omega, rad/s
  double drive_wavelength = 0.0;  // lambda, m
  double beam_angle = 0.0;        // theta, rad
};

// SI value used only by lamb_dicke(); all dynamics run with hbar = 1.
inline constexpr double hbar_si = 1.0545718e-34;

// Simulations cap at 6 physical qubits (Hilbert dimension 64).
inline constexpr int max_qubits = 6;

enum class PauliAxis { x, y, z };

// Single-site Pauli embedded in n qubits. Qubit 0 is the leftmost character
// of a ket label, i.e. the most significant bit of the basis index.
// Conventions: sz|0>=+|0>, sx|0>=|1>, sy|0>=i|1>.
ComplexMatrix pauli(PauliAxis axis, int qubit_index, int n_qubits);

// Collective dephasing generator: sum of sz over all qubits. Diagonal entry
// for a basis ket equals (#zeros - #ones) in its bitstring.
ComplexMatrix collective_sz(int n_qubits);

// Pairwise couplings g * s_i s_j. The xx and yy terms commute; their sum
// (the XY exchange term) annihilates |00> and |11> of the pair and swaps
// |01>/|10> at rate 2g.
ComplexMatrix h_xx(int i, int j, double g, int n_qubits);
ComplexMatrix h_yy(int i, int j, double g, int n_qubits);
ComplexMatrix h_xy(int i, int j, double g, int n_qubits);

// eta = sqrt(hbar / (2 N M omega)) * (1/lambda) * cos(theta)
double lamb_dicke(const TrapParameters& trap);

// g = eta^2 Omega^2 / Delta; sign of Delta propagates to the Hamiltonian.
double coupling_strength(const PulseParameters& p);

}  // namespace iondfs
