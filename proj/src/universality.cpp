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

#include "universality.hpp"

#include <cmath>

#include "hamiltonians.hpp"

namespace iondfs {

namespace {

constexpr double rank_tol = 1e-9;
constexpr int max_rounds = 20;

double inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.data.size(); ++k)
    s += (std::conj(a.data[k]) * b.data[k]).real();
  return s;
}

ComplexMatrix traceless_anti_hermitian(const ComplexMatrix& h) {
  const int k = h.rows;
  ComplexMatrix a = Complex(0.0, 1.0) * h;
  const Complex shift = trace(a) / static_cast<double>(k);
  for (int d = 0; d < k; ++d) a(d, d) -= shift;
  return a;
}

// Returns true and appends if `candidate` has an independent component.
bool absorb(std::vector<ComplexMatrix>& basis, ComplexMatrix candidate) {
  const double scale = norm_fro(candidate);
  if (scale <= 1e-14) return false;
  candidate = (1.0 / scale) * candidate;
  // Two Gram-Schmidt passes keep the basis orthonormal to roundoff.
  for (int pass = 0; pass < 2; ++pass)
    for (const ComplexMatrix& b : basis) {
      const double c = inner(b, candidate);
      if (c != 0.0) candidate = candidate - c * b;
    }
  const double residual = norm_fro(candidate);
  if (residual <= rank_tol) return false;
  basis.push_back((1.0 / residual) * candidate);
  return true;
}

}  // namespace

LieClosureReport lie_closure(const std::vector<ComplexMatrix>& generators) {
  if (generators.empty()) raise(ErrorCode::empty_generators, "lie_closure: no generators");
  const int k = generators.front().rows;
  for (const ComplexMatrix& g : generators) {
    if (!g.is_square() || g.rows != k)
      raise(ErrorCode::dimension_mismatch, "lie_closure: generators must share one square dimension");
    if (!is_hermitian(g, 1e-10))
      raise(ErrorCode::not_hermitian, "lie_closure: generators must be Hermitian");
  }

  LieClosureReport report;
  report.generator_count = static_cast<int>(generators.size());

  std::vector<ComplexMatrix> basis;
  for (const ComplexMatrix& g : generators) absorb(basis, traceless_anti_hermitian(g));

  int rounds = 0;
  while (true) {
    if (rounds >= max_rounds)
      raise(ErrorCode::closure_iteration_limit, "lie_closure: commutator rounds exceeded the cap");
    ++rounds;
    const size_t snapshot = basis.size();
    bool grew = false;
    for (size_t a = 0; a < snapshot; ++a)
      for (size_t b = a + 1; b < snapshot; ++b)
        grew |= absorb(basis, commutator(basis[a], basis[b]));
    if (!grew) break;
  }

  report.iterations = rounds;
  report.closure_dimension = static_cast<int>(basis.size());
  report.basis = std::move(basis);
  return report;
}

LieClosureReport check_encoded_universality(const CodeSpace& code,
                                            const std::vector<std::pair<int, int>>& pairs) {
  if (code.dimension() != 3)
    raise(ErrorCode::code_dimension_unsupported,
          "check_encoded_universality: the closure check targets 3-dimensional codes");
  std::vector<ComplexMatrix> generators;
  generators.reserve(pairs.size());
  for (const auto& [i, j] : pairs)
    generators.push_back(project_operator(h_xy(i, j, 1.0, code.n_qubits), code));
  return lie_closure(generators);
}

}  // namespace iondfs
