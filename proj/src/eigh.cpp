// Copyright 2026 The qbclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbc/eigh.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbc/kernels.hpp"

namespace qbc {

EighResult eigh(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigh: non-square matrix");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  EighResult r;
  r.eigenvalues.resize(a.rows());
  r.eigenvectors = a;  // zheevd overwrites with eigenvectors
  if (n == 0) return r;
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_ROW_MAJOR, 'V', 'U', n,
      reinterpret_cast<lapack_complex_double*>(r.eigenvectors.data()), n,
      r.eigenvalues.data());
  if (info != 0) throw std::runtime_error("eigh: zheevd failed");
  // With jobz='V' the array now holds the orthonormal eigenvectors as
  // columns, so a = V diag(w) V^dag.
  return r;
}

SvdResult svd_square(const Matrix& x) {
  if (x.rows() != x.cols())
    throw std::invalid_argument("svd_square: non-square matrix");
  const std::size_t n = x.rows();
  const Matrix gram = kernels::matmul(x.adjoint(), x);
  EighResult e = eigh(gram);
  SvdResult r;
  r.singular_values.resize(n);
  r.v = Matrix(n, n);
  // eigh is ascending; emit singular values descending.
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = n - 1 - k;
    r.singular_values[k] = std::sqrt(std::max(0.0, e.eigenvalues[src]));
    for (std::size_t i = 0; i < n; ++i) r.v(i, k) = e.eigenvectors(i, src);
  }
  // W columns: x v_k / s_k for s_k above cutoff; complete the rest by
  // Gram-Schmidt over canonical basis vectors, in index order.
  const double cutoff =
      (n ? r.singular_values[0] : 0.0) * 1e-13 + 1e-300;
  r.w = Matrix(n, n);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (r.singular_values[k] <= cutoff) break;
    for (std::size_t i = 0; i < n; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += x(i, j) * r.v(j, k);
      r.w(i, k) = s / r.singular_values[k];
    }
    ++rank;
  }
  std::size_t next = rank;
  for (std::size_t cand = 0; cand < n && next < n; ++cand) {
    CVec col(n, 0.0);
    col[cand] = 1.0;
    for (std::size_t k = 0; k < next; ++k) {
      cplx ov = 0.0;
      for (std::size_t i = 0; i < n; ++i) ov += std::conj(r.w(i, k)) * col[i];
      for (std::size_t i = 0; i < n; ++i) col[i] -= ov * r.w(i, k);
    }
    const double nn = std::sqrt(norm2(col));
    if (nn < 0.5) continue;  // candidate nearly inside the span, try next
    for (std::size_t i = 0; i < n; ++i) r.w(i, next) = col[i] / nn;
    ++next;
  }
  if (next < n) throw std::runtime_error("svd_square: basis completion failed");
  return r;
}

double nuclear_norm(const Matrix& x) {
  const Matrix gram = kernels::matmul(x.adjoint(), x);
  EighResult e = eigh(gram);
  double s = 0.0;
  for (double w : e.eigenvalues) s += std::sqrt(std::max(0.0, w));
  return s;
}

}  // namespace qbc
