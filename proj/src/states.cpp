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

#include "qbc/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbc/eigh.hpp"
#include "qbc/kernels.hpp"

namespace qbc {

namespace {

// Eager positivity checks are limited to this dimension; see header.
constexpr std::size_t kEagerPsdDim = 512;

void check_equal_dims(const std::vector<int>& a, const std::vector<int>& b,
                      const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dims mismatch");
}

// Clamp rule for eigenvalues of numerically computed density operators.
double clamp_density_eigenvalue(double w) {
  if (w >= 0.0) return w;
  if (w >= tol::kEigClampFloor) return 0.0;
  throw std::invalid_argument("density operator has a negative eigenvalue beyond tolerance");
}

void fix_phase(CVec& v) {
  for (const cplx& x : v) {
    if (std::abs(x) > 1e-8) {
      const cplx ph = x / std::abs(x);
      for (cplx& y : v) y /= ph;
      return;
    }
  }
}

}  // namespace

PureState::PureState(CVec amplitudes, std::vector<int> dims)
    : amp_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (amp_.size() != dim_product(dims_))
    throw std::invalid_argument("PureState: product(dims) != amplitude count");
  if (std::abs(std::sqrt(norm2(amp_)) - 1.0) > tol::kConstruction)
    throw std::invalid_argument("PureState: not normalized");
}

PureState PureState::basis_state(std::vector<int> dims, std::size_t index) {
  CVec a(dim_product(dims), 0.0);
  if (index >= a.size()) throw std::invalid_argument("basis_state: index out of range");
  a[index] = 1.0;
  return PureState(std::move(a), std::move(dims));
}

PureState PureState::qubit(cplx a0, cplx a1) {
  return PureState({a0, a1}, {2});
}

cplx PureState::inner(const PureState& other) const {
  if (amp_.size() != other.amp_.size())
    throw std::invalid_argument("inner: dimension mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i)
    s += std::conj(amp_[i]) * other.amp_[i];
  return s;
}

DensityOp::DensityOp(Matrix m, std::vector<int> dims)
    : m_(std::move(m)), dims_(std::move(dims)) {
  const std::size_t d = dim_product(dims_);
  if (m_.rows() != d || m_.cols() != d)
    throw std::invalid_argument("DensityOp: dims/matrix mismatch");
  if (!m_.is_hermitian(tol::kConstruction))
    throw std::invalid_argument("DensityOp: not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0)) > tol::kConstruction)
    throw std::invalid_argument("DensityOp: trace != 1");
  if (d <= kEagerPsdDim) {
    const EighResult e = eigh(m_);
    if (!e.eigenvalues.empty() && e.eigenvalues.front() < tol::kEigClampFloor)
      throw std::invalid_argument("DensityOp: negative eigenvalue beyond tolerance");
  }
}

DensityOp DensityOp::from_pure(const PureState& s) {
  Matrix m(s.dim(), s.dim());
  kernels::add_outer(m, s.amplitudes(), 1.0);
  return DensityOp(std::move(m), s.dims());
}

UnitaryOp::UnitaryOp(Matrix m, std::vector<int> dims)
    : m_(std::move(m)), dims_(std::move(dims)) {
  const std::size_t d = dim_product(dims_);
  if (m_.rows() != d || m_.cols() != d)
    throw std::invalid_argument("UnitaryOp: dims/matrix mismatch");
  const Matrix g = kernels::matmul(m_.adjoint(), m_);
  if (g.max_abs_diff(Matrix::identity(d)) > 1e-10)
    throw std::invalid_argument("UnitaryOp: not unitary");
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState(kernels::kron_vec(a.amplitudes(), b.amplitudes()),
                   std::move(dims));
}

DensityOp tensor(const DensityOp& a, const DensityOp& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityOp(kernels::kron(a.matrix(), b.matrix()), std::move(dims));
}

UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return UnitaryOp(kernels::kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep) {
  std::vector<int> newDims;
  for (int p : keep) newDims.push_back(rho.dims()[static_cast<std::size_t>(p)]);
  return DensityOp(kernels::partial_trace_mat(rho.matrix(), rho.dims(), keep),
                   std::move(newDims));
}

DensityOp reduced_density(const PureState& s, const std::vector<int>& keep) {
  std::vector<int> newDims;
  for (int p : keep) {
    if (p < 0 || static_cast<std::size_t>(p) >= s.dims().size())
      throw std::invalid_argument("reduced_density: index out of range");
    newDims.push_back(s.dims()[static_cast<std::size_t>(p)]);
  }
  return DensityOp(kernels::reduced_density(s.amplitudes(), s.dims(), keep),
                   std::move(newDims));
}

double trace_norm(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("trace_norm: non-square");
  if (!a.is_hermitian(1e-9))
    throw std::invalid_argument("trace_norm: expected a Hermitian matrix");
  const EighResult e = eigh(a);
  double s = 0.0;
  for (double w : e.eigenvalues) s += std::abs(w);
  return s;
}

double helstrom(const DensityOp& rho0, const DensityOp& rho1) {
  check_equal_dims(rho0.dims(), rho1.dims(), "helstrom");
  return 0.5 + 0.25 * trace_norm(rho0.matrix() - rho1.matrix());
}

double fidelity(const DensityOp& rho, const DensityOp& sigma) {
  check_equal_dims(rho.dims(), sigma.dims(), "fidelity");
  const std::size_t n = rho.dim();
  EighResult e = eigh(rho.matrix());
  Matrix scaled = e.eigenvectors;  // columns scaled by sqrt(w)
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sqrt(clamp_density_eigenvalue(e.eigenvalues[j]));
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= s;
  }
  const Matrix sqrtRho = kernels::matmul(scaled, e.eigenvectors.adjoint());
  const Matrix mid =
      kernels::matmul(kernels::matmul(sqrtRho, sigma.matrix()), sqrtRho);
  // mid is PSD up to roundoff; symmetrize before the second eigensolve.
  Matrix sym = mid;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym(i, j) = 0.5 * (mid(i, j) + std::conj(mid(j, i)));
  const EighResult e2 = eigh(sym);
  double f = 0.0;
  for (double w : e2.eigenvalues) f += std::sqrt(std::max(0.0, w));
  return std::min(f, 1.0 + 1e-12);
}

double ensemble_fidelity(const std::vector<double>& weights0,
                         const std::vector<CVec>& states0,
                         const std::vector<double>& weights1,
                         const std::vector<CVec>& states1) {
  if (weights0.size() != states0.size() || weights1.size() != states1.size())
    throw std::invalid_argument("ensemble_fidelity: weight/state count mismatch");
  const std::size_t r0 = states0.size(), r1 = states1.size();
  if (r0 == 0 || r1 == 0) throw std::invalid_argument("ensemble_fidelity: empty ensemble");
  const std::size_t vd = states0.front().size();
  for (const auto& v : states0)
    if (v.size() != vd) throw std::invalid_argument("ensemble_fidelity: ragged ensemble");
  for (const auto& v : states1)
    if (v.size() != vd) throw std::invalid_argument("ensemble_fidelity: ragged ensemble");
  // Cross-Gram X[i,j] = sqrt(w0_i w1_j) <v0_i | v1_j>; F = nuclear norm.
  const std::size_t n = std::max(r0, r1);
  Matrix x(n, n);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < r1; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < states0[i].size(); ++k)
        s += std::conj(states0[i][k]) * states1[j][k];
      x(i, j) = std::sqrt(weights0[i] * weights1[j]) * s;
    }
  return nuclear_norm(x);
}

SchmidtForm schmidt(const PureState& s, const std::vector<int>& cut_a) {
  const std::size_t nsub = s.dims().size();
  if (cut_a.empty() || cut_a.size() >= nsub)
    throw std::invalid_argument("schmidt: bipartition must be a proper nonempty cut");
  std::vector<int> cut_b;
  {
    std::vector<bool> inA(nsub, false);
    for (int p : cut_a) {
      if (p < 0 || static_cast<std::size_t>(p) >= nsub)
        throw std::invalid_argument("schmidt: invalid bipartition");
      if (inA[static_cast<std::size_t>(p)])
        throw std::invalid_argument("schmidt: duplicate index in bipartition");
      inA[static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t p = 0; p < nsub; ++p)
      if (!inA[p]) cut_b.push_back(static_cast<int>(p));
  }
  std::vector<int> dimsA, dimsB;
  for (int p : cut_a) dimsA.push_back(s.dims()[static_cast<std::size_t>(p)]);
  for (int p : cut_b) dimsB.push_back(s.dims()[static_cast<std::size_t>(p)]);

  const Matrix rhoA =
      kernels::reduced_density(s.amplitudes(), s.dims(), cut_a);
  EighResult e = eigh(rhoA);
  const std::size_t dA = rhoA.rows();

  // Order descending, keep weights above the rank cutoff.
  std::vector<std::size_t> idx;
  for (std::size_t j = dA; j-- > 0;) {
    const double w = clamp_density_eigenvalue(e.eigenvalues[j]);
    if (w > 1e-12) idx.push_back(j);
  }

  // Deterministic degenerate-block handling: project canonical basis vectors
  // onto each equal-eigenvalue block and Gram-Schmidt in index order.
  std::vector<CVec> cols;
  for (std::size_t j : idx) {
    CVec c(dA);
    for (std::size_t i = 0; i < dA; ++i) c[i] = e.eigenvectors(i, j);
    cols.push_back(std::move(c));
  }
  std::size_t start = 0;
  while (start < idx.size()) {
    std::size_t stop = start + 1;
    while (stop < idx.size() &&
           std::abs(e.eigenvalues[idx[stop]] - e.eigenvalues[idx[start]]) < 1e-10)
      ++stop;
    const std::size_t g = stop - start;
    if (g > 1) {
      std::vector<CVec> fixed;
      for (std::size_t cand = 0; cand < dA && fixed.size() < g; ++cand) {
        // Project e_cand onto the block span.
        CVec v(dA, 0.0);
        for (std::size_t k = start; k < stop; ++k) {
          const cplx ov = std::conj(cols[k][cand]);  // <col_k|e_cand>
          for (std::size_t i = 0; i < dA; ++i) v[i] += ov * cols[k][i];
        }
        for (const auto& f : fixed) {
          cplx ov = 0.0;
          for (std::size_t i = 0; i < dA; ++i) ov += std::conj(f[i]) * v[i];
          for (std::size_t i = 0; i < dA; ++i) v[i] -= ov * f[i];
        }
        const double nn = std::sqrt(norm2(v));
        if (nn < 1e-6) continue;
        for (auto& x : v) x /= nn;
        fixed.push_back(std::move(v));
      }
      if (fixed.size() != g)
        throw std::runtime_error("schmidt: degenerate block basis completion failed");
      for (std::size_t k = 0; k < g; ++k) cols[start + k] = fixed[k];
    }
    start = stop;
  }
  for (auto& c : cols) fix_phase(c);

  SchmidtForm out;
  const auto kbA = kernels::base_offsets(s.dims(), cut_a);
  const auto kbB = kernels::base_offsets(s.dims(), cut_b);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double coeff =
        std::sqrt(clamp_density_eigenvalue(e.eigenvalues[idx[k]]));
    // b_k = (<a_k| (x) I) |s> / coeff
    CVec b(kbB.size(), 0.0);
    for (std::size_t ib = 0; ib < kbB.size(); ++ib) {
      cplx acc = 0.0;
      for (std::size_t ia = 0; ia < kbA.size(); ++ia)
        acc += std::conj(cols[k][ia]) * s.amplitudes()[kbA[ia] + kbB[ib]];
      b[ib] = acc / coeff;
    }
    // Roundoff can leave |b| off unity by a few ulp at tiny coefficients.
    const double bn = std::sqrt(norm2(b));
    for (auto& x : b) x /= bn;
    out.coefficients.push_back(coeff);
    out.basis_a.emplace_back(cols[k], dimsA);
    out.basis_b.emplace_back(std::move(b), dimsB);
  }
  return out;
}

Matrix embed_operator(const Matrix& u, const std::vector<int>& targets,
                      const std::vector<int>& dims) {
  std::size_t du = 1;
  for (int p : targets) du *= static_cast<std::size_t>(dims[static_cast<std::size_t>(p)]);
  if (u.rows() != du || u.cols() != du)
    throw std::invalid_argument("embed_operator: operator dims mismatch");
  const std::size_t dim = dim_product(dims);
  std::vector<int> rest;
  for (int p = 0; p < static_cast<int>(dims.size()); ++p)
    if (std::find(targets.begin(), targets.end(), p) == targets.end())
      rest.push_back(p);
  const auto ub = kernels::base_offsets(dims, targets);
  const auto rb = kernels::base_offsets(dims, rest);
  Matrix big(dim, dim);
  for (std::size_t r = 0; r < rb.size(); ++r)
    for (std::size_t i = 0; i < du; ++i)
      for (std::size_t j = 0; j < du; ++j)
        big(rb[r] + ub[i], rb[r] + ub[j]) = u(i, j);
  return big;
}

PureState apply_local(const UnitaryOp& u, const std::vector<int>& targets,
                      const PureState& s) {
  if (targets.size() != u.dims().size())
    throw std::invalid_argument("apply_local: target count mismatch");
  for (std::size_t k = 0; k < targets.size(); ++k)
    if (s.dims()[static_cast<std::size_t>(targets[k])] != u.dims()[k])
      throw std::invalid_argument("apply_local: target dims mismatch");
  CVec amp = s.amplitudes();
  kernels::apply_local_vec(u.matrix(), targets, amp, s.dims());
  return PureState(std::move(amp), s.dims());
}

DensityOp apply_local(const UnitaryOp& u, const std::vector<int>& targets,
                      const DensityOp& rho) {
  const Matrix big = embed_operator(u.matrix(), targets, rho.dims());
  return DensityOp(
      kernels::matmul(kernels::matmul(big, rho.matrix()), big.adjoint()),
      rho.dims());
}

namespace {

void validate_projector_family(const std::vector<Matrix>& projectors,
                               std::size_t du) {
  if (projectors.empty())
    throw std::invalid_argument("projective measurement: empty projector set");
  Matrix sum(du, du);
  for (const Matrix& p : projectors) {
    if (p.rows() != du || p.cols() != du)
      throw std::invalid_argument("projector dimension mismatch");
    if (!p.is_hermitian(1e-10))
      throw std::invalid_argument("projector not Hermitian");
    if (kernels::matmul(p, p).max_abs_diff(p) > 1e-10)
      throw std::invalid_argument("projector not idempotent");
    sum += p;
  }
  if (sum.max_abs_diff(Matrix::identity(du)) > 1e-10)
    throw std::invalid_argument("incomplete projector set");
}

}  // namespace

std::vector<double> outcome_probabilities(const PureState& s,
                                          const std::vector<Matrix>& projectors,
                                          const std::vector<int>& targets) {
  std::size_t du = 1;
  for (int p : targets) du *= static_cast<std::size_t>(s.dims()[static_cast<std::size_t>(p)]);
  validate_projector_family(projectors, du);
  std::vector<double> probs;
  probs.reserve(projectors.size());
  for (const Matrix& p : projectors) {
    CVec amp = s.amplitudes();
    kernels::apply_local_vec(p, targets, amp, s.dims());
    probs.push_back(norm2(amp));
  }
  double total = 0.0;
  for (double q : probs) total += q;
  if (std::abs(total - 1.0) > tol::kConstruction)
    throw std::runtime_error("outcome_probabilities: probabilities do not sum to 1");
  return probs;
}

MeasureResult measure_projective(const PureState& s,
                                 const std::vector<Matrix>& projectors,
                                 const std::vector<int>& targets, Rng& rng) {
  const std::vector<double> probs = outcome_probabilities(s, projectors, targets);
  const std::size_t k = rng.pick_weighted(probs);
  CVec amp = s.amplitudes();
  kernels::apply_local_vec(projectors[k], targets, amp, s.dims());
  const double nn = std::sqrt(norm2(amp));
  for (auto& x : amp) x /= nn;
  return MeasureResult{k, PureState(std::move(amp), s.dims())};
}

}  // namespace qbc
