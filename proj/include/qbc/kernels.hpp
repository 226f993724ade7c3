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

#ifndef QBC_KERNELS_HPP_
#define QBC_KERNELS_HPP_

#include <vector>

#include "qbc/matrix.hpp"

// Dense kernels used by every higher layer.  The production versions are
// OpenMP-parallel (matmul is delegated to BLAS); qbc::kernels::serial holds
// plain reference implementations that favor obviousness over speed.  Tests
// compare the two on random inputs, and tools/bench_kernels times them.
namespace qbc::kernels {

// C = A * B.
Matrix matmul(const Matrix& a, const Matrix& b);

// Kronecker products; index convention: the left factor is the most
// significant digit, flat = i_left * dim_right + i_right.
Matrix kron(const Matrix& a, const Matrix& b);
CVec kron_vec(const CVec& a, const CVec& b);

// rho[k,k'] = sum_t psi[(k,t)] conj(psi[(k',t)]) over the traced subsystems;
// `keep` lists subsystem positions to retain, in their original order.
Matrix reduced_density(const CVec& amp, const std::vector<int>& dims,
                       const std::vector<int>& keep);

// Partial trace of a density matrix over all subsystems not in `keep`.
Matrix partial_trace_mat(const Matrix& rho, const std::vector<int>& dims,
                         const std::vector<int>& keep);

// In-place statevector update: applies u (du x du, du = product of target
// dims) to the listed subsystem positions.
void apply_local_vec(const Matrix& u, const std::vector<int>& targets,
                     CVec& amp, const std::vector<int>& dims);

// Reorders subsystems so that new slot q holds old position order[q].
CVec permute_subsystems(const CVec& amp, const std::vector<int>& dims,
                        const std::vector<int>& order);

// acc += w * v v^dag.
void add_outer(Matrix& acc, const CVec& v, double w);

// Mixed-radix index helpers shared by the kernels.
std::vector<std::size_t> strides_of(const std::vector<int>& dims);
std::vector<std::size_t> base_offsets(const std::vector<int>& dims,
                                      const std::vector<int>& subset);

namespace serial {

// Reference implementations.  They deliberately take the most naive route
// (full embedding, elementwise loops) so that agreement with the production
// kernels is a meaningful check rather than a copy of the same code path.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
CVec kron_vec(const CVec& a, const CVec& b);
Matrix reduced_density(const CVec& amp, const std::vector<int>& dims,
                       const std::vector<int>& keep);
void apply_local_vec(const Matrix& u, const std::vector<int>& targets,
                     CVec& amp, const std::vector<int>& dims);
CVec permute_subsystems(const CVec& amp, const std::vector<int>& dims,
                        const std::vector<int>& order);

// Embeds u acting on `targets` into the full product space.
Matrix embed(const Matrix& u, const std::vector<int>& targets,
             const std::vector<int>& dims);

}  // namespace serial

}  // namespace qbc::kernels

#endif  // QBC_KERNELS_HPP_
