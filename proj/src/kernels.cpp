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

#include "qbc/kernels.hpp"

#include <cblas.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace qbc::kernels {

namespace {

void check_mul_shapes(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
}

// Digits of flat index `x` w.r.t. dims, most significant first.
std::vector<int> digits_of(std::size_t x, const std::vector<int>& dims) {
  std::vector<int> d(dims.size());
  for (std::size_t p = dims.size(); p-- > 0;) {
    d[p] = static_cast<int>(x % static_cast<std::size_t>(dims[p]));
    x /= static_cast<std::size_t>(dims[p]);
  }
  return d;
}

void check_subset(const std::vector<int>& subset, std::size_t nsub) {
  std::vector<bool> seen(nsub, false);
  for (int p : subset) {
    if (p < 0 || static_cast<std::size_t>(p) >= nsub)
      throw std::invalid_argument("subsystem index out of range");
    if (seen[static_cast<std::size_t>(p)])
      throw std::invalid_argument("duplicate subsystem index");
    seen[static_cast<std::size_t>(p)] = true;
  }
}

}  // namespace

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
  std::vector<std::size_t> s(dims.size());
  std::size_t acc = 1;
  for (std::size_t p = dims.size(); p-- > 0;) {
    s[p] = acc;
    acc *= static_cast<std::size_t>(dims[p]);
  }
  return s;
}

// Flat offsets contributed by the `subset` positions, enumerating their joint
// index in mixed-radix order (first listed position most significant).
std::vector<std::size_t> base_offsets(const std::vector<int>& dims,
                                      const std::vector<int>& subset) {
  const auto strides = strides_of(dims);
  std::size_t total = 1;
  for (int p : subset) total *= static_cast<std::size_t>(dims[p]);
  std::vector<std::size_t> base(total, 0);
  std::size_t rep = total;
  for (int p : subset) {
    const std::size_t d = static_cast<std::size_t>(dims[p]);
    rep /= d;
    for (std::size_t i = 0; i < total; ++i)
      base[i] += ((i / rep) % d) * strides[p];
  }
  return base;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b);
  Matrix c(a.rows(), b.cols());
  const cplx one(1.0, 0.0), zero(0.0, 0.0);
  cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans,
              static_cast<int>(a.rows()), static_cast<int>(b.cols()),
              static_cast<int>(a.cols()), &one, a.data(),
              static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()),
              &zero, c.data(), static_cast<int>(c.cols()));
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  const std::int64_t ar = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < ar; ++i) {
    for (std::size_t k = 0; k < b.rows(); ++k)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const cplx aij = a(static_cast<std::size_t>(i), j);
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(static_cast<std::size_t>(i) * b.rows() + k, j * b.cols() + l) =
              aij * b(k, l);
      }
  }
  return c;
}

CVec kron_vec(const CVec& a, const CVec& b) {
  CVec c(a.size() * b.size());
  const std::int64_t n = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[static_cast<std::size_t>(i) * b.size() + j] =
          a[static_cast<std::size_t>(i)] * b[j];
  return c;
}

Matrix reduced_density(const CVec& amp, const std::vector<int>& dims,
                       const std::vector<int>& keep) {
  if (amp.size() != dim_product(dims))
    throw std::invalid_argument("reduced_density: amplitude length mismatch");
  check_subset(keep, dims.size());
  std::vector<int> traced;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p)
    if (std::find(keep.begin(), keep.end(), p) == keep.end()) traced.push_back(p);
  const auto kb = base_offsets(dims, keep);
  const auto tb = base_offsets(dims, traced);
  const std::int64_t dk = static_cast<std::int64_t>(kb.size());
  Matrix rho(kb.size(), kb.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dk; ++i) {
    const std::size_t bi = kb[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < kb.size(); ++j) {
      cplx s = 0.0;
      const std::size_t bj = kb[j];
      for (std::size_t t = 0; t < tb.size(); ++t)
        s += amp[bi + tb[t]] * std::conj(amp[bj + tb[t]]);
      rho(static_cast<std::size_t>(i), j) = s;
    }
  }
  return rho;
}

Matrix partial_trace_mat(const Matrix& rho, const std::vector<int>& dims,
                         const std::vector<int>& keep) {
  const std::size_t dim = dim_product(dims);
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  check_subset(keep, dims.size());
  std::vector<int> traced;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p)
    if (std::find(keep.begin(), keep.end(), p) == keep.end()) traced.push_back(p);
  const auto kb = base_offsets(dims, keep);
  const auto tb = base_offsets(dims, traced);
  const std::int64_t dk = static_cast<std::int64_t>(kb.size());
  Matrix out(kb.size(), kb.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < kb.size(); ++j) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < tb.size(); ++t)
        s += rho(kb[static_cast<std::size_t>(i)] + tb[t], kb[j] + tb[t]);
      out(static_cast<std::size_t>(i), j) = s;
    }
  }
  return out;
}

void apply_local_vec(const Matrix& u, const std::vector<int>& targets,
                     CVec& amp, const std::vector<int>& dims) {
  if (amp.size() != dim_product(dims))
    throw std::invalid_argument("apply_local_vec: amplitude length mismatch");
  check_subset(targets, dims.size());
  std::size_t du = 1;
  for (int p : targets) du *= static_cast<std::size_t>(dims[p]);
  if (u.rows() != du || u.cols() != du)
    throw std::invalid_argument("apply_local_vec: unitary dimension mismatch");
  std::vector<int> rest;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p)
    if (std::find(targets.begin(), targets.end(), p) == targets.end())
      rest.push_back(p);
  const auto ub = base_offsets(dims, targets);
  const auto rb = base_offsets(dims, rest);
  const std::int64_t nr = static_cast<std::int64_t>(rb.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < nr; ++r) {
    const std::size_t base = rb[static_cast<std::size_t>(r)];
    CVec x(du), y(du, 0.0);
    for (std::size_t t = 0; t < du; ++t) x[t] = amp[base + ub[t]];
    for (std::size_t i = 0; i < du; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < du; ++j) s += u(i, j) * x[j];
      y[i] = s;
    }
    for (std::size_t t = 0; t < du; ++t) amp[base + ub[t]] = y[t];
  }
}

CVec permute_subsystems(const CVec& amp, const std::vector<int>& dims,
                        const std::vector<int>& order) {
  if (order.size() != dims.size())
    throw std::invalid_argument("permute_subsystems: order size mismatch");
  check_subset(order, dims.size());
  std::vector<int> newDims(order.size());
  for (std::size_t q = 0; q < order.size(); ++q)
    newDims[q] = dims[static_cast<std::size_t>(order[q])];
  const auto oldStrides = strides_of(dims);
  const auto newStrides = strides_of(newDims);
  CVec out(amp.size());
  const std::int64_t n = static_cast<std::int64_t>(amp.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) {
    std::size_t rem = static_cast<std::size_t>(x);
    std::size_t y = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
      const std::size_t digit = rem / newStrides[q];
      rem %= newStrides[q];
      y += digit * oldStrides[static_cast<std::size_t>(order[q])];
    }
    out[static_cast<std::size_t>(x)] = amp[y];
  }
  return out;
}

void add_outer(Matrix& acc, const CVec& v, double w) {
  if (acc.rows() != v.size() || acc.cols() != v.size())
    throw std::invalid_argument("add_outer: shape mismatch");
  const std::int64_t n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const cplx vi = v[static_cast<std::size_t>(i)] * w;
    for (std::size_t j = 0; j < v.size(); ++j)
      acc(static_cast<std::size_t>(i), j) += vi * std::conj(v[j]);
  }
}

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_mul_shapes(a, b);
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      c(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return c;
}

CVec kron_vec(const CVec& a, const CVec& b) {
  CVec c(a.size() * b.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a[i / b.size()] * b[i % b.size()];
  return c;
}

// Traces one subsystem at a time from the full outer product.
Matrix reduced_density(const CVec& amp, const std::vector<int>& dims,
                       const std::vector<int>& keep) {
  Matrix rho(amp.size(), amp.size());
  for (std::size_t i = 0; i < amp.size(); ++i)
    for (std::size_t j = 0; j < amp.size(); ++j)
      rho(i, j) = amp[i] * std::conj(amp[j]);
  std::vector<int> curDims = dims;
  // Repeatedly trace out the highest-numbered position not kept, so earlier
  // positions stay where they are.
  std::vector<bool> keepMask(dims.size(), false);
  for (int p : keep) keepMask[static_cast<std::size_t>(p)] = true;
  for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
    if (keepMask[static_cast<std::size_t>(p)]) continue;
    const std::size_t d = static_cast<std::size_t>(curDims[p]);
    std::size_t left = 1;
    for (int q = 0; q < p; ++q) left *= static_cast<std::size_t>(curDims[q]);
    std::size_t right = 1;
    for (std::size_t q = static_cast<std::size_t>(p) + 1; q < curDims.size(); ++q)
      right *= static_cast<std::size_t>(curDims[q]);
    Matrix next(left * right, left * right);
    for (std::size_t li = 0; li < left; ++li)
      for (std::size_t ri = 0; ri < right; ++ri)
        for (std::size_t lj = 0; lj < left; ++lj)
          for (std::size_t rj = 0; rj < right; ++rj) {
            cplx s = 0.0;
            for (std::size_t t = 0; t < d; ++t)
              s += rho((li * d + t) * right + ri, (lj * d + t) * right + rj);
            next(li * right + ri, lj * right + rj) = s;
          }
    rho = next;
    curDims.erase(curDims.begin() + p);
  }
  // keep was required to preserve original order, so no reordering is needed.
  return rho;
}

CVec permute_subsystems(const CVec& amp, const std::vector<int>& dims,
                        const std::vector<int>& order) {
  std::vector<int> newDims(order.size());
  for (std::size_t q = 0; q < order.size(); ++q)
    newDims[q] = dims[static_cast<std::size_t>(order[q])];
  CVec out(amp.size());
  for (std::size_t x = 0; x < amp.size(); ++x) {
    const auto nd = digits_of(x, newDims);
    std::vector<int> od(dims.size());
    for (std::size_t q = 0; q < order.size(); ++q)
      od[static_cast<std::size_t>(order[q])] = nd[q];
    std::size_t y = 0;
    for (std::size_t p = 0; p < dims.size(); ++p)
      y = y * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(od[p]);
    out[x] = amp[y];
  }
  return out;
}

Matrix embed(const Matrix& u, const std::vector<int>& targets,
             const std::vector<int>& dims) {
  // Bring targets to the front, apply u (x) I, then undo the reordering.
  std::vector<int> order = targets;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p)
    if (std::find(targets.begin(), targets.end(), p) == targets.end())
      order.push_back(p);
  const std::size_t dim = dim_product(dims);
  std::size_t du = 1;
  for (int p : targets) du *= static_cast<std::size_t>(dims[p]);
  Matrix big = serial::kron(u, Matrix::identity(dim / du));
  // Permutation matrix P: |front order basis> -> |original order basis>.
  std::vector<int> newDims(order.size());
  for (std::size_t q = 0; q < order.size(); ++q)
    newDims[q] = dims[static_cast<std::size_t>(order[q])];
  Matrix perm(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    CVec e(dim, 0.0);
    e[x] = 1.0;
    // e is in reordered layout; find its original-layout index.
    const auto nd = digits_of(x, newDims);
    std::vector<int> od(dims.size());
    for (std::size_t q = 0; q < order.size(); ++q)
      od[static_cast<std::size_t>(order[q])] = nd[q];
    std::size_t y = 0;
    for (std::size_t p = 0; p < dims.size(); ++p)
      y = y * static_cast<std::size_t>(dims[p]) + static_cast<std::size_t>(od[p]);
    perm(y, x) = 1.0;
  }
  return serial::matmul(serial::matmul(perm, big), perm.adjoint());
}

void apply_local_vec(const Matrix& u, const std::vector<int>& targets,
                     CVec& amp, const std::vector<int>& dims) {
  const Matrix big = embed(u, targets, dims);
  CVec out(amp.size(), 0.0);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < amp.size(); ++j) s += big(i, j) * amp[j];
    out[i] = s;
  }
  amp = out;
}

}  // namespace serial

}  // namespace qbc::kernels
