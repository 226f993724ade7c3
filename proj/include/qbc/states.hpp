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

#ifndef QBC_STATES_HPP_
#define QBC_STATES_HPP_

#include <vector>

#include "qbc/matrix.hpp"
#include "qbc/rng.hpp"

namespace qbc {

// Tolerance tiers: construction-time invariants, derived-quantity
// assertions, and cross-method comparisons.
namespace tol {
constexpr double kConstruction = 1e-12;
constexpr double kDerived = 1e-10;
constexpr double kCrossMethod = 1e-9;
// Density-operator eigenvalues in [kEigClampFloor, 0) are treated as
// roundoff and zeroed; anything below is an error.
constexpr double kEigClampFloor = -1e-10;
}  // namespace tol

// Normalized state vector over an explicit list of subsystem dimensions.
class PureState {
 public:
  PureState(CVec amplitudes, std::vector<int> dims);

  static PureState basis_state(std::vector<int> dims, std::size_t index);
  static PureState qubit(cplx a0, cplx a1);

  const CVec& amplitudes() const { return amp_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t dim() const { return amp_.size(); }
  std::size_t num_subsystems() const { return dims_.size(); }

  cplx inner(const PureState& other) const;  // <this|other>

 private:
  CVec amp_;
  std::vector<int> dims_;
};

// Positive unit-trace operator over subsystem dimensions.  Hermiticity and
// trace are checked on construction; positivity is eigenchecked eagerly up
// to dimension 512 and enforced at the eigendecomposition sites beyond that.
class DensityOp {
 public:
  DensityOp(Matrix m, std::vector<int> dims);

  static DensityOp from_pure(const PureState& s);

  const Matrix& matrix() const { return m_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  Matrix m_;
  std::vector<int> dims_;
};

// Unitary with U^dag U = I within 1e-10.
class UnitaryOp {
 public:
  UnitaryOp(Matrix m, std::vector<int> dims);

  const Matrix& matrix() const { return m_; }
  const std::vector<int>& dims() const { return dims_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  Matrix m_;
  std::vector<int> dims_;
};

// Schmidt data for a bipartition: descending nonnegative coefficients and
// matched orthonormal bases.
struct SchmidtForm {
  std::vector<double> coefficients;
  std::vector<PureState> basis_a;
  std::vector<PureState> basis_b;
};

// --- tensor products (kind mismatch is a type error in this API) ---
PureState tensor(const PureState& a, const PureState& b);
DensityOp tensor(const DensityOp& a, const DensityOp& b);
UnitaryOp tensor(const UnitaryOp& a, const UnitaryOp& b);

// Partial trace onto the `keep` positions (original order preserved).
DensityOp partial_trace(const DensityOp& rho, const std::vector<int>& keep);
// Marginal of a pure state without forming the full outer product.
DensityOp reduced_density(const PureState& s, const std::vector<int>& keep);

// Sum of |eigenvalues| of a Hermitian matrix.
double trace_norm(const Matrix& a);

// Optimal equal-prior discrimination probability,
// 1/2 + ||rho0 - rho1||_1 / 4.
double helstrom(const DensityOp& rho0, const DensityOp& rho1);

// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const DensityOp& rho, const DensityOp& sigma);

// Fidelity of the mixtures sum_i w_i |v_i><v_i| computed from the weighted
// cross-Gram matrix; algebraically equal to fidelity() of the assembled
// operators and usable far beyond the dense cap when ranks are small.
double ensemble_fidelity(const std::vector<double>& weights0,
                         const std::vector<CVec>& states0,
                         const std::vector<double>& weights1,
                         const std::vector<CVec>& states1);

// Schmidt decomposition across the bipartition (cut_a | complement).
// Within a degenerate coefficient block the A basis is re-fixed by
// Gram-Schmidt over canonical basis vectors in index order, and the B basis
// is derived from it, so the output is deterministic.
SchmidtForm schmidt(const PureState& s, const std::vector<int>& cut_a);

// Applies u to the listed subsystem positions.
PureState apply_local(const UnitaryOp& u, const std::vector<int>& targets,
                      const PureState& s);
DensityOp apply_local(const UnitaryOp& u, const std::vector<int>& targets,
                      const DensityOp& rho);

// Full-space embedding of an operator acting on `targets`.
Matrix embed_operator(const Matrix& u, const std::vector<int>& targets,
                      const std::vector<int>& dims);

// Projective measurement on the target subsystems.  The projector family
// must be Hermitian, idempotent and complete (all within 1e-10).  Outcomes
// are sampled with Born probabilities; the post-state is the renormalized
// projection.
struct MeasureResult {
  std::size_t outcome;
  PureState post;
};
MeasureResult measure_projective(const PureState& s,
                                 const std::vector<Matrix>& projectors,
                                 const std::vector<int>& targets, Rng& rng);

// Exact counterpart of measure_projective for closed-form checks.
std::vector<double> outcome_probabilities(const PureState& s,
                                          const std::vector<Matrix>& projectors,
                                          const std::vector<int>& targets);

}  // namespace qbc

#endif  // QBC_STATES_HPP_
