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

#include <complex>
#include <vector>

#include "errors.hpp"

namespace iondfs {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Everything in this library lives in
// Hilbert spaces of dimension <= 64, so dense O(n^3) algorithms are fine.
struct ComplexMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;

  ComplexMatrix() = default;
  ComplexMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
    if (r <= 0 || c <= 0) raise(ErrorCode::invalid_argument, "matrix dimensions must be positive");
  }

  static ComplexMatrix zero(int r, int c) { return ComplexMatrix(r, c); }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  Complex& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const Complex& operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  bool is_square() const { return rows == cols; }
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entry magnitude; the max-norm used by all tolerance checks.
double norm_max(const ComplexMatrix& a);
double norm_fro(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, double tol);

// (a + a^dagger)/2; exact Hermitian input for the spectral routines.
ComplexMatrix symmetrize(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, unitary
};

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
// Throws not_hermitian if the input violates the symmetry tolerance.
EigResult herm_eig(const ComplexMatrix& h, double hermiticity_tol = 1e-12);

// exp(-i * scale * h) for Hermitian h, via the eigendecomposition.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale);

// Hermitian PSD square root; eigenvalues in [-1e-8, 0) are treated as
// roundoff and clamped to zero, anything below -1e-8 is rejected.
ComplexMatrix sqrtm_psd(const ComplexMatrix& rho);

}  // namespace iondfs
