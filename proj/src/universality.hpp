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

#include <utility>
#include <vector>

#include "codes.hpp"
#include "linalg.hpp"

namespace iondfs {

struct LieClosureReport {
  int generator_count = 0;
  int closure_dimension = 0;
  int iterations = 0;  // commutator rounds until no new element appeared
  // Anti-Hermitian, traceless, orthonormal under <A,B> = Re tr(A^dag B).
  std::vector<ComplexMatrix> basis;
};

// Real Lie-algebra span of i*(traceless part of each generator) under
// repeated commutators, orthonormalized by modified Gram-Schmidt with rank
// tolerance 1e-9. Generators must be Hermitian k x k matrices.
LieClosureReport lie_closure(const std::vector<ComplexMatrix>& generators);

// Projects the pairwise XY coupling for each pair onto the 3-dimensional
// code and closes the algebra. The encoded operations are universal iff the
// closure dimension is 8 (all of su(3)).
LieClosureReport check_encoded_universality(const CodeSpace& code,
                                            const std::vector<std::pair<int, int>>& pairs);

inline bool is_universal(const LieClosureReport& report) { return report.closure_dimension == 8; }

}  // namespace iondfs
