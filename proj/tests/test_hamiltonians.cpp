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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "errors.hpp"
#include "hamiltonians.hpp"
#include "test_helpers.hpp"

using iondfs::Complex;
using iondfs::ComplexMatrix;
using iondfs::PauliAxis;

namespace {

// Index of the basis ket whose string is `bits`, qubit 0 leftmost.
int ket_index(const char* bits) {
  int idx = 0;
  for (const char* p = bits; *p != '\0'; ++p) idx = idx * 2 + (*p - '0');
  return idx;
}

}  // namespace

TEST_CASE("single-qubit operators act with the expected matrix elements") {
  // One qubit: sigma_z = diag(1, -1), sigma_x flips, sigma_y flips with phase.
  const ComplexMatrix sz = iondfs::pauli(PauliAxis::z, 0, 1);
  CHECK(std::abs(sz(0, 0) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(1, 1) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(0, 1)) <= 1e-15);

  const ComplexMatrix sx = iondfs::pauli(PauliAxis::x, 0, 1);
  CHECK(std::abs(sx(0, 1) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sx(1, 0) - Complex(1.0, 0.0)) <= 1e-15);

  const ComplexMatrix sy = iondfs::pauli(PauliAxis::y, 0, 1);
  CHECK(std::abs(sy(0, 1) - Complex(0.0, -1.0)) <= 1e-15);
  CHECK(std::abs(sy(1, 0) - Complex(0.0, 1.0)) <= 1e-15);
}

TEST_CASE("qubit 0 is the leftmost character of a basis ket") {
  // pauli(z, 0, 2) must be diag(1, 1, -1, -1): qubit 0 is the high bit.
  const ComplexMatrix sz0 = iondfs::pauli(PauliAxis::z, 0, 2);
  const double want[4] = {1.0, 1.0, -1.0, -1.0};
  for (int d = 0; d < 4; ++d) {
    CHECK(std::abs(sz0(d, d) - Complex(want[d], 0.0)) <= 1e-15);
  }

  // pauli(y, 0, 2)|10> = -i|00>: flipping the already-set high bit picks up -i.
  const ComplexMatrix sy0 = iondfs::pauli(PauliAxis::y, 0, 2);
  CHECK(std::abs(sy0(ket_index("00"), ket_index("10")) - Complex(0.0, -1.0)) <= 1e-15);
  CHECK(std::abs(sy0(ket_index("10"), ket_index("00")) - Complex(0.0, 1.0)) <= 1e-15);
}

TEST_CASE("pauli operators square to the identity and anticommute on a site") {
  for (int n = 1; n <= 3; ++n) {
    for (int q = 0; q < n; ++q) {
      const ComplexMatrix x = iondfs::pauli(PauliAxis::x, q, n);
      const ComplexMatrix y = iondfs::pauli(PauliAxis::y, q, n);
      const ComplexMatrix z = iondfs::pauli(PauliAxis::z, q, n);
      const ComplexMatrix id = ComplexMatrix::identity(1 << n);
      CHECK(iondfs::norm_max(x * x - id) <= 1e-15);
      CHECK(iondfs::norm_max(y * y - id) <= 1e-15);
      CHECK(iondfs::norm_max(z * z - id) <= 1e-15);
      CHECK(iondfs::norm_max(x * y + y * x) <= 1e-15);
      // xy = iz on the same site.
      CHECK(iondfs::norm_max(x * y - Complex(0.0, 1.0) * z) <= 1e-15);
    }
  }
}

TEST_CASE("pauli validates its qubit index") {
  CHECK_THROWS_AS(iondfs::pauli(PauliAxis::x, 2, 2), iondfs::Error);
  CHECK_THROWS_AS(iondfs::pauli(PauliAxis::x, -1, 2), iondfs::Error);
  try {
    iondfs::pauli(PauliAxis::x, 5, 3);
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::index_out_of_range);
  }
}

TEST_CASE("collective dephasing operator counts zeros minus ones") {
  const ComplexMatrix sz = iondfs::collective_sz(3);
  REQUIRE(sz.rows == 8);
  // |001| has two zeros and one one: eigenvalue +1. |110| mirrors it at -1.
  CHECK(std::abs(sz(ket_index("001"), ket_index("001")) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(ket_index("110"), ket_index("110")) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(ket_index("000"), ket_index("000")) - Complex(3.0, 0.0)) <= 1e-15);
  CHECK(std::abs(sz(ket_index("111"), ket_index("111")) - Complex(-3.0, 0.0)) <= 1e-15);
  // Equals the sum of the single-site z operators.
  ComplexMatrix sum = ComplexMatrix::zero(8, 8);
  for (int q = 0; q < 3; ++q) sum = sum + iondfs::pauli(PauliAxis::z, q, 3);
  CHECK(iondfs::norm_max(sz - sum) <= 1e-15);
}

TEST_CASE("pairwise couplings act on two-qubit states as expected") {
  // h_xx on qubits (0,1) of 2: g * sigma_x sigma_x maps |00> -> |11>.
  const ComplexMatrix hxx = iondfs::h_xx(0, 1, 1.5, 2);
  CHECK(std::abs(hxx(ket_index("11"), ket_index("00")) - Complex(1.5, 0.0)) <= 1e-15);
  CHECK(std::abs(hxx(ket_index("10"), ket_index("01")) - Complex(1.5, 0.0)) <= 1e-15);
  CHECK(iondfs::is_hermitian(hxx, 1e-14));

  // h_yy maps |00> -> -|11| (two +i phases multiply to -1) and |01> -> +|10>.
  const ComplexMatrix hyy = iondfs::h_yy(0, 1, 1.0, 2);
  CHECK(std::abs(hyy(ket_index("11"), ket_index("00")) - Complex(-1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(hyy(ket_index("10"), ket_index("01")) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(iondfs::is_hermitian(hyy, 1e-14));

  // The combined coupling cancels the double-flip channel and doubles the
  // excitation-swap channel.
  const ComplexMatrix hxy = iondfs::h_xy(0, 1, 1.0, 2);
  CHECK(std::abs(hxy(ket_index("11"), ket_index("00"))) <= 1e-15);
  CHECK(std::abs(hxy(ket_index("10"), ket_index("01")) - Complex(2.0, 0.0)) <= 1e-15);
  CHECK(std::abs(hxy(ket_index("01"), ket_index("10")) - Complex(2.0, 0.0)) <= 1e-15);
  CHECK(iondfs::is_hermitian(hxy, 1e-14));
  CHECK(iondfs::norm_max(hxy) <= 2.0 + 1e-15);
}

TEST_CASE("three-qubit couplings move excitations between the named qubits") {
  // h_xx(1, 2) on 3 qubits flips both named qubits: |001> -> |010> and the
  // number-non-conserving |100> -> |111>.
  const ComplexMatrix hxx = iondfs::h_xx(1, 2, 1.0, 3);
  CHECK(std::abs(hxx(ket_index("010"), ket_index("001")) - Complex(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(hxx(ket_index("111"), ket_index("100")) - Complex(1.0, 0.0)) <= 1e-15);
  const ComplexMatrix hxy = iondfs::h_xy(1, 2, 1.0, 3);
  CHECK(std::abs(hxy(ket_index("010"), ket_index("001")) - Complex(2.0, 0.0)) <= 1e-15);
  // Within the xy coupling the total excitation number is conserved.
  CHECK(std::abs(hxy(ket_index("100"), ket_index("001"))) <= 1e-15);
  CHECK(std::abs(hxy(ket_index("111"), ket_index("001"))) <= 1e-15);

  // Coupling strength scales every element linearly.
  const ComplexMatrix hxy_scaled = iondfs::h_xy(1, 2, 2.5, 3);
  CHECK(iondfs::norm_max(hxy_scaled - 2.5 * hxy) <= 1e-14);
}

TEST_CASE("the two coupling terms commute with each other and with dephasing") {
  for (int n = 2; n <= 4; ++n) {
    const ComplexMatrix sz = iondfs::collective_sz(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const ComplexMatrix hxx = iondfs::h_xx(i, j, 0.7, n);
        const ComplexMatrix hyy = iondfs::h_yy(i, j, 0.7, n);
        const ComplexMatrix hxy = iondfs::h_xy(i, j, 0.7, n);
        CHECK(iondfs::norm_max(iondfs::commutator(hxx, hyy)) <= 1e-13);
        CHECK(iondfs::norm_max(iondfs::commutator(hxy, sz)) <= 1e-13);
      }
    }
    // The individual terms do not commute with collective dephasing; only
    // their sum does. This asymmetry is the whole point of alternating.
    const ComplexMatrix hxx01 = iondfs::h_xx(0, 1, 1.0, n);
    CHECK(iondfs::norm_max(iondfs::commutator(hxx01, sz)) > 0.1);
  }
}

TEST_CASE("coupling builders validate their qubit arguments") {
  try {
    iondfs::h_xx(1, 1, 1.0, 3);
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::same_qubit);
  }
  try {
    iondfs::h_xy(0, 3, 1.0, 3);
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::index_out_of_range);
  }
}

TEST_CASE("lamb-dicke parameter matches a hand-computed trap configuration") {
  // Single calcium-mass ion in a 1 MHz trap driven at 729 nm, beam along the
  // trap axis. The value is frozen from an independent evaluation of
  // sqrt(hbar / (2 N M omega)) * cos(theta) / lambda.
  iondfs::TrapParameters trap;
  trap.ion_count = 1;
  trap.ion_mass = 6.64e-26;
  trap.trap_frequency = 2.0 * std::numbers::pi * 1.0e6;
  trap.drive_wavelength = 729e-9;
  trap.beam_angle = 0.0;
  const double eta = iondfs::lamb_dicke(trap);
  CHECK(eta == doctest::Approx(0.015421320987407408).epsilon(1e-12));

  // A perpendicular beam has no projection on the mode.
  iondfs::TrapParameters perp = trap;
  perp.beam_angle = std::numbers::pi / 2.0;
  CHECK(std::abs(iondfs::lamb_dicke(perp)) <= 1e-12);

  // Doubling the ion count scales the collective-mode mass, so eta drops by
  // sqrt(2).
  iondfs::TrapParameters two = trap;
  two.ion_count = 2;
  CHECK(iondfs::lamb_dicke(two) == doctest::Approx(eta / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("lamb-dicke rejects non-positive physical inputs") {
  iondfs::TrapParameters trap;
  trap.ion_count = 0;
  trap.ion_mass = 6.64e-26;
  trap.trap_frequency = 1.0e6;
  trap.drive_wavelength = 729e-9;
  trap.beam_angle = 0.0;
  CHECK_THROWS_AS(iondfs::lamb_dicke(trap), iondfs::Error);
  trap.ion_count = 1;
  trap.ion_mass = -1.0;
  CHECK_THROWS_AS(iondfs::lamb_dicke(trap), iondfs::Error);
  trap.ion_mass = 6.64e-26;
  trap.drive_wavelength = 0.0;
  CHECK_THROWS_AS(iondfs::lamb_dicke(trap), iondfs::Error);
}

TEST_CASE("effective coupling strength is eta^2 omega^2 over detuning") {
  iondfs::PulseParameters p;
  p.lamb_dicke = 1.0;
  p.rabi_frequency = 1.0;
  p.detuning = 1.0;
  CHECK(iondfs::coupling_strength(p) == doctest::Approx(1.0).epsilon(1e-15));

  p.lamb_dicke = 0.1;
  p.rabi_frequency = 100.0;
  p.detuning = 10.0;
  CHECK(iondfs::coupling_strength(p) == doctest::Approx(10.0).epsilon(1e-12));

  // The sign follows the detuning.
  p.detuning = -10.0;
  CHECK(iondfs::coupling_strength(p) == doctest::Approx(-10.0).epsilon(1e-12));

  p.detuning = 0.0;
  try {
    iondfs::coupling_strength(p);
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::zero_detuning);
  }
}
