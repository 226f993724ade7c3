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

#ifndef QBC_EIGH_HPP_
#define QBC_EIGH_HPP_

#include <vector>

#include "qbc/matrix.hpp"

namespace qbc {

// Hermitian eigendecomposition: a = V diag(w) V^dag with w ascending and V
// unitary (columns are eigenvectors).  This is the single numerical kernel
// behind trace_norm, fidelity and schmidt.
struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // column j pairs with eigenvalues[j]
};

EighResult eigh(const Matrix& a);

// Singular value decomposition x = W diag(s) V^dag derived from eigh of
// x^dag x; s is descending, W and V are unitary (W completed to a full basis
// when x is rank deficient).
struct SvdResult {
  Matrix w;
  std::vector<double> singular_values;
  Matrix v;
};

SvdResult svd_square(const Matrix& x);

// Sum of singular values.
double nuclear_norm(const Matrix& x);

}  // namespace qbc

#endif  // QBC_EIGH_HPP_
