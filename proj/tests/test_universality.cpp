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
#include <utility>
#include <vector>

#include "doctest.h"
#include "codes.hpp"
#include "errors.hpp"
#include "hamiltonians.hpp"
#include "linalg.hpp"
#include "universality.hpp"
#include "test_helpers.hpp"

using iondfs::CodeName;
using iondfs::CodeSpace;
using iondfs::Complex;
using iondfs::ComplexMatrix;
using iondfs::LieClosureReport;

namespace {

ComplexMatrix sigma(iondfs::PauliAxis axis) { return iondfs::pauli(axis, 0, 1); }

// Frobenius inner product <a, b> = tr(a^dag b).
Complex frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
  return iondfs::trace(iondfs::adjoint(a) * b);
}

}  // namespace

TEST_CASE("closure of a single generator is one-dimensional") {
  const LieClosureReport report = iondfs::lie_closure({sigma(iondfs::PauliAxis::x)});
  CHECK(report.generator_count == 1);
  CHECK(report.closure_dimension == 1);
  CHECK_FALSE(iondfs::is_universal(report));
}

TEST_CASE("two anticommuting generators close into the full rotation algebra") {
  const LieClosureReport report =
      iondfs::lie_closure({sigma(iondfs::PauliAxis::x), sigma(iondfs::PauliAxis::y)});
  CHECK(report.closure_dimension == 3);
  CHECK(report.iterations <= 3);
}

TEST_CASE("closure basis elements are traceless anti-hermitian and orthonormal") {
  const CodeSpace code = iondfs::standard_code(CodeName::c_one);
  std::vector<ComplexMatrix> gens;
  const std::pair<int, int> pairs[] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& [i, j] : pairs)
    gens.push_back(iondfs::project_operator(iondfs::h_xy(i, j, 1.0, 3), code));
  const LieClosureReport report = iondfs::lie_closure(gens);

  REQUIRE(static_cast<int>(report.basis.size()) == report.closure_dimension);
  for (size_t a = 0; a < report.basis.size(); ++a) {
    const ComplexMatrix& m = report.basis[a];
    CHECK(iondfs::norm_max(m + iondfs::adjoint(m)) <= 1e-10);
    CHECK(std::abs(iondfs::trace(m)) <= 1e-10);
    for (size_t b = 0; b < report.basis.size(); ++b) {
      const Complex overlap = frobenius(report.basis[a], report.basis[b]);
      const double want = (a == b) ? 1.0 : 0.0;
      CHECK(std::abs(overlap - Complex(want, 0.0)) <= 1e-9);
    }
  }
}

TEST_CASE("projected pair couplings generate the full traceless algebra") {
  // On either three-dimensional code, the three projected couplings close
  // into all eight traceless directions, which is what makes any encoded
  // single-qutrit unitary reachable.
  for (CodeName name : {CodeName::c_one, CodeName::c_two}) {
    const CodeSpace code = iondfs::standard_code(name);
    const std::vector<std::pair<int, int>> pairs = {{0, 1}, {1, 2}, {0, 2}};
    const LieClosureReport report = iondfs::check_encoded_universality(code, pairs);
    CHECK(report.generator_count == 3);
    CHECK(report.closure_dimension == 8);
    CHECK(iondfs::is_universal(report));
    CHECK(report.iterations <= 4);
  }
}

TEST_CASE("a single projected coupling is not universal") {
  const CodeSpace code = iondfs::standard_code(CodeName::c_one);
  const LieClosureReport report =
      iondfs::check_encoded_universality(code, {{0, 1}});
  CHECK(report.closure_dimension == 1);
  CHECK_FALSE(iondfs::is_universal(report));
}

TEST_CASE("two projected couplings close into a rotation subalgebra only") {
  // Adjacent pair couplings bracket into a three-dimensional subalgebra (the
  // two couplings plus the rotation their commutator generates), so the third
  // pair is what completes universality rather than being redundant.
  const CodeSpace code = iondfs::standard_code(CodeName::c_one);
  const LieClosureReport report =
      iondfs::check_encoded_universality(code, {{0, 1}, {1, 2}});
  CHECK(report.closure_dimension == 3);
  CHECK_FALSE(iondfs::is_universal(report));
}

TEST_CASE("closure dimension is invariant under unitary conjugation and rescaling") {
  const CodeSpace code = iondfs::standard_code(CodeName::c_one);
  std::vector<ComplexMatrix> gens;
  const std::pair<int, int> pairs[] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& [i, j] : pairs)
    gens.push_back(iondfs::project_operator(iondfs::h_xy(i, j, 1.0, 3), code));

  // Conjugate every generator by the same random unitary.
  const ComplexMatrix herm = testutil::random_hermitian(3, 77);
  const ComplexMatrix u = iondfs::expm_hermitian(herm, 1.0);
  std::vector<ComplexMatrix> conjugated;
  for (const ComplexMatrix& g : gens) conjugated.push_back(u * g * iondfs::adjoint(u));
  CHECK(iondfs::lie_closure(conjugated).closure_dimension == 8);

  // Rescale each generator by a different positive factor.
  std::vector<ComplexMatrix> rescaled;
  double scale = 0.3;
  for (const ComplexMatrix& g : gens) {
    rescaled.push_back(scale * g);
    scale *= 2.7;
  }
  CHECK(iondfs::lie_closure(rescaled).closure_dimension == 8);

  // An identity shift changes nothing: the algebra is built from traceless
  // parts.
  std::vector<ComplexMatrix> shifted;
  for (const ComplexMatrix& g : gens)
    shifted.push_back(g + 1.7 * ComplexMatrix::identity(3));
  CHECK(iondfs::lie_closure(shifted).closure_dimension == 8);
}

TEST_CASE("closure validates its inputs") {
  CHECK_THROWS_AS(iondfs::lie_closure({}), iondfs::Error);
  try {
    iondfs::lie_closure({});
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::empty_generators);
  }

  // Non-hermitian generator.
  ComplexMatrix bad = ComplexMatrix::zero(2, 2);
  bad(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(iondfs::lie_closure({bad}), iondfs::Error);

  // Mismatched dimensions.
  CHECK_THROWS_AS(iondfs::lie_closure({sigma(iondfs::PauliAxis::x),
                                       ComplexMatrix::identity(3)}),
                  iondfs::Error);
}

TEST_CASE("universality check requires a three-dimensional code") {
  const CodeSpace pair = iondfs::standard_code(CodeName::pair_dfs);
  try {
    iondfs::check_encoded_universality(pair, {{0, 1}});
    CHECK(false);
  } catch (const iondfs::Error& e) {
    CHECK(e.code() == iondfs::ErrorCode::code_dimension_unsupported);
  }
}
