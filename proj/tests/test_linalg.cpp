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

#include <doctest.h>

#include "hamiltonians.hpp"
#include "linalg.hpp"
#include "test_helpers.hpp"

using iondfs::Complex;
using iondfs::ComplexMatrix;
using testutil::max_diff;

namespace {

ComplexMatrix sigma(iondfs::PauliAxis axis) { return iondfs::pauli(axis, 0, 1); }

}  // namespace

TEST_CASE("kron basics") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_diff(iondfs::kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zz = iondfs::kron(sigma(iondfs::PauliAxis::z), sigma(iondfs::PauliAxis::z));
  CHECK(zz(0, 0) == Complex(1.0, 0.0));
  CHECK(zz(1, 1) == Complex(-1.0, 0.0));
  CHECK(zz(2, 2) == Complex(-1.0, 0.0));
  CHECK(zz(3, 3) == Complex(1.0, 0.0));

  const ComplexMatrix xy = iondfs::kron(sigma(iondfs::PauliAxis::x), sigma(iondfs::PauliAxis::y));
  CHECK(xy(0, 3) == Complex(0.0, -1.0));
}

TEST_CASE("kron dimensions and associativity") {
  const ComplexMatrix a = testutil::random_matrix(2, 3, 11);
  const ComplexMatrix b = testutil::random_matrix(3, 2, 12);
  const ComplexMatrix c = testutil::random_matrix(2, 2, 13);
  const ComplexMatrix left = iondfs::kron(iondfs::kron(a, b), c);
  const ComplexMatrix right = iondfs::kron(a, iondfs::kron(b, c));
  CHECK(left.rows == 2 * 3 * 2);
  CHECK(left.cols == 3 * 2 * 2);
  CHECK(max_diff(left, right) <= 1e-14);
}

TEST_CASE("herm_eig on single-qubit operators") {
  const auto eig_z = iondfs::herm_eig(sigma(iondfs::PauliAxis::z));
  CHECK(eig_z.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig_z.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  const auto eig_x = iondfs::herm_eig(sigma(iondfs::PauliAxis::x));
  CHECK(eig_x.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig_x.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  // Eigenvectors are (|0> -+ |1>)/sqrt(2) up to phase: check overlap moduli.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex minus = inv_sqrt2 * (eig_x.eigenvectors(0, 0) - eig_x.eigenvectors(1, 0));
  const Complex plus = inv_sqrt2 * (eig_x.eigenvectors(0, 1) + eig_x.eigenvectors(1, 1));
  CHECK(std::abs(minus) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(plus) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("herm_eig of the two-qubit exchange coupling") {
  const ComplexMatrix h = iondfs::h_xy(0, 1, 1.0, 2);
  const auto eig = iondfs::herm_eig(h);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(std::abs(eig.eigenvalues[1]) <= 1e-12);
  CHECK(std::abs(eig.eigenvalues[2]) <= 1e-12);
  CHECK(eig.eigenvalues[3] == doctest::Approx(2.0).epsilon(1e-12));

  // The -2/+2 eigenvectors are (|01> -+ |10>)/sqrt(2) up to phase.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto overlap = [&](int col, double sign) {
    return std::abs(inv_sqrt2 *
                    (eig.eigenvectors(1, col) + sign * eig.eigenvectors(2, col)));
  };
  CHECK(overlap(0, -1.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(overlap(3, 1.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("herm_eig reconstruction and unitarity across dimensions") {
  for (int dim : {2, 3, 5, 8, 16, 33, 64}) {
    const ComplexMatrix h = testutil::random_hermitian(dim, 100 + dim);
    const auto eig = iondfs::herm_eig(h);
    const ComplexMatrix& v = eig.eigenvectors;

    ComplexMatrix lambda(dim, dim);
    for (int k = 0; k < dim; ++k) lambda(k, k) = eig.eigenvalues[k];
    CHECK(max_diff(v * lambda * iondfs::adjoint(v), h) <= 1e-10);
    CHECK(max_diff(iondfs::adjoint(v) * v, ComplexMatrix::identity(dim)) <= 1e-10);
    for (int k = 1; k < dim; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
  }
}

TEST_CASE("herm_eig rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = Complex(0.5, 0.0);
  CHECK_THROWS_AS(iondfs::herm_eig(m), iondfs::Error);
  try {
    iondfs::herm_eig(m);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::not_hermitian);
  }
}

TEST_CASE("expm_hermitian basics") {
  const ComplexMatrix h = testutil::random_hermitian(6, 21);
  CHECK(max_diff(iondfs::expm_hermitian(h, 0.0), ComplexMatrix::identity(6)) <= 1e-12);

  const ComplexMatrix uz = iondfs::expm_hermitian(sigma(iondfs::PauliAxis::z), std::numbers::pi / 2.0);
  CHECK(std::abs(uz(0, 0) - std::polar(1.0, -std::numbers::pi / 2.0)) <= 1e-12);
  CHECK(std::abs(uz(1, 1) - std::polar(1.0, std::numbers::pi / 2.0)) <= 1e-12);
  CHECK(std::abs(uz(0, 1)) <= 1e-12);

  // exp(-i t YY) = cos(t) I - i sin(t) YY, since YY squares to identity.
  const ComplexMatrix yy = iondfs::h_yy(0, 1, 1.0, 2);
  const double t = 0.731;
  const ComplexMatrix expected =
      std::cos(t) * ComplexMatrix::identity(4) + Complex(0.0, -std::sin(t)) * yy;
  CHECK(max_diff(iondfs::expm_hermitian(yy, t), expected) <= 1e-12);
}

TEST_CASE("expm_hermitian inverse and series-oracle agreement") {
  const ComplexMatrix h = testutil::random_hermitian(8, 31);
  const double t = 0.937;
  const ComplexMatrix u = iondfs::expm_hermitian(h, t);
  const ComplexMatrix u_back = iondfs::expm_hermitian(h, -t);
  CHECK(max_diff(u * u_back, ComplexMatrix::identity(8)) <= 1e-10);
  CHECK(max_diff(u, testutil::expm_unitary_series(h, t)) <= 1e-12);
}

TEST_CASE("sqrtm_psd basics") {
  CHECK(max_diff(iondfs::sqrtm_psd(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <=
        1e-12);

  ComplexMatrix d(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const ComplexMatrix rd = iondfs::sqrtm_psd(d);
  CHECK(std::abs(rd(0, 0) - Complex(2.0, 0.0)) <= 1e-12);
  CHECK(std::abs(rd(1, 1) - Complex(3.0, 0.0)) <= 1e-12);

  // A rank-1 projector is its own square root.
  ComplexMatrix plus(2, 2);
  plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
  CHECK(max_diff(iondfs::sqrtm_psd(plus), plus) <= 1e-12);
}

TEST_CASE("sqrtm_psd squares back and rejects indefinite input") {
  for (int dim : {2, 5, 16, 32}) {
    const ComplexMatrix rho = testutil::random_psd(dim, 200 + dim);
    const ComplexMatrix s = iondfs::sqrtm_psd(rho);
    CHECK(max_diff(s * s, rho) <= 1e-8);
    CHECK(iondfs::is_hermitian(s, 1e-10));
  }

  ComplexMatrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(1, 1) = -1e-6;
  CHECK_THROWS_AS(iondfs::sqrtm_psd(bad), iondfs::Error);
  try {
    iondfs::sqrtm_psd(bad);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::not_psd);
  }

  // Roundoff-scale negatives are clamped, not rejected.
  ComplexMatrix tiny(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = -1e-12;
  const ComplexMatrix root = iondfs::sqrtm_psd(tiny);
  CHECK(std::abs(root(1, 1)) <= 1e-6);
}
