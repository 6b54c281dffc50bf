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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace iondfs {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows != b.rows || a.cols != b.cols)
    raise(ErrorCode::dimension_mismatch, std::string(op) + ": shapes differ");
}

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) raise(ErrorCode::dimension_mismatch, std::string(op) + ": matrix not square");
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out(a.rows, a.cols);
  for (size_t k = 0; k < a.data.size(); ++k) out.data[k] = a.data[k] + b.data[k];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "sub");
  ComplexMatrix out(a.rows, a.cols);
  for (size_t k = 0; k < a.data.size(); ++k) out.data[k] = a.data[k] - b.data[k];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols != b.rows) raise(ErrorCode::dimension_mismatch, "matmul: inner dimensions differ");
  ComplexMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = &b.data[static_cast<size_t>(k) * b.cols];
      Complex* orow = &out.data[static_cast<size_t>(i) * out.cols];
      for (int j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows, a.cols);
  for (size_t k = 0; k < a.data.size(); ++k) out.data[k] = s * a.data[k];
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex t = 0.0;
  for (int i = 0; i < a.rows; ++i) t += a(i, i);
  return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

double norm_max(const ComplexMatrix& a) {
  double m = 0.0;
  for (const Complex& v : a.data) m = std::max(m, std::abs(v));
  return m;
}

double norm_fro(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& v : a.data) s += std::norm(v);
  return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (int i = 0; i < a.rows; ++i)
    for (int j = i; j < a.cols; ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

ComplexMatrix symmetrize(const ComplexMatrix& a) {
  require_square(a, "symmetrize");
  ComplexMatrix out(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (int ia = 0; ia < a.rows; ++ia)
    for (int ja = 0; ja < a.cols; ++ja) {
      const Complex av = a(ia, ja);
      if (av == Complex(0.0, 0.0)) continue;
      for (int ib = 0; ib < b.rows; ++ib)
        for (int jb = 0; jb < b.cols; ++jb)
          out(ia * b.rows + ib, ja * b.cols + jb) = av * b(ib, jb);
    }
  return out;
}

namespace {

// Off-diagonal Frobenius norm, the Jacobi convergence measure.
double off_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int j = i + 1; j < a.cols; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigResult herm_eig(const ComplexMatrix& h, double hermiticity_tol) {
  require_square(h, "herm_eig");
  if (!is_hermitian(h, hermiticity_tol))
    raise(ErrorCode::not_hermitian, "herm_eig: input exceeds Hermiticity tolerance");

  const int n = h.rows;
  ComplexMatrix a = symmetrize(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, norm_fro(a));
  const double stop = 1e-14 * scale;
  const int max_sweeps = 60;

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (off_norm(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double ab = std::abs(b);
        if (ab < 1e-280) continue;
        // Unitary rotation in the (p,q) plane zeroing a(p,q):
        //   J[p][p]=c, J[p][q]=-s e^{i beta}, J[q][p]=s e^{-i beta}, J[q][q]=c
        // with beta = arg(b) and tan(2 theta) = 2|b| / (a_pp - a_qq).
        const double beta = std::arg(b);
        const double theta = 0.5 * std::atan2(2.0 * ab, a(p, p).real() - a(q, q).real());
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex eib = std::polar(1.0, beta);
        const Complex eibc = std::conj(eib);

        for (int r = 0; r < n; ++r) {  // A <- A J, columns p and q
          const Complex ap = a(r, p), aq = a(r, q);
          a(r, p) = c * ap + s * eibc * aq;
          a(r, q) = -s * eib * ap + c * aq;
        }
        for (int cidx = 0; cidx < n; ++cidx) {  // A <- J^dagger A, rows p and q
          const Complex ap = a(p, cidx), aq = a(q, cidx);
          a(p, cidx) = c * ap + s * eib * aq;
          a(q, cidx) = -s * eibc * ap + c * aq;
        }
        for (int r = 0; r < n; ++r) {  // V <- V J
          const Complex vp = v(r, p), vq = v(r, q);
          v(r, p) = c * vp + s * eibc * vq;
          v(r, q) = -s * eib * vp + c * vq;
        }
      }
    }
  }
  if (sweep == max_sweeps && off_norm(a) > stop)
    raise(ErrorCode::numerical_failure, "herm_eig: Jacobi sweeps did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

namespace {

// V f(lambda) V^dagger for a spectral function given as per-eigenvalue factors.
ComplexMatrix spectral_assemble(const EigResult& eig, const std::vector<Complex>& f) {
  const int n = eig.eigenvectors.rows;
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    if (f[k] == Complex(0.0, 0.0)) continue;
    for (int i = 0; i < n; ++i) {
      const Complex vf = v(i, k) * f[k];
      for (int j = 0; j < n; ++j) out(i, j) += vf * std::conj(v(j, k));
    }
  }
  return out;
}

}  // namespace

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double scale) {
  EigResult eig = herm_eig(h);
  std::vector<Complex> f(eig.eigenvalues.size());
  for (size_t k = 0; k < f.size(); ++k)
    f[k] = std::polar(1.0, -scale * eig.eigenvalues[k]);
  return spectral_assemble(eig, f);
}

ComplexMatrix sqrtm_psd(const ComplexMatrix& rho) {
  require_square(rho, "sqrtm_psd");
  // Symmetrize first: integrator output is Hermitian only to ~1e-9 and the
  // only contract here is positivity.
  EigResult eig = herm_eig(symmetrize(rho));
  std::vector<Complex> f(eig.eigenvalues.size());
  for (size_t k = 0; k < f.size(); ++k) {
    double lam = eig.eigenvalues[k];
    if (lam < -1e-8)
      raise(ErrorCode::not_psd, "sqrtm_psd: eigenvalue " + std::to_string(lam) + " below PSD floor");
    f[k] = std::sqrt(std::max(lam, 0.0));
  }
  return spectral_assemble(eig, f);
}

}  // namespace iondfs
