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

#ifndef QBC_STATE_KIT_HPP_
#define QBC_STATE_KIT_HPP_

#include <string>
#include <vector>

#include "qbc/states.hpp"

// Concrete state families: the real-amplitude great circle of a qubit,
// rotations within it, the four-state BB84 set, parity codewords and their
// mixtures, commitment entanglements, purifications and controlled
// unitaries.
namespace qbc {

// Exact density operators are limited to this many qubits; larger systems
// must go through factorized closed forms.
constexpr int kDenseQubitCap = 12;

// Angle on the fixed great circle, reduced mod 2pi.
class GreatCircleAngle {
 public:
  explicit GreatCircleAngle(double theta);
  double theta() const { return theta_; }

 private:
  double theta_;
};

struct StateSet {
  std::string label;
  std::vector<PureState> states;           // single-qubit states
  std::vector<GreatCircleAngle> angles;

  // Canonical text: label followed by the angle list in decimal radians at
  // 15 significant digits.  Used in transcripts and golden files.
  std::string canonical_text() const;
};

// cos(theta/2)|0> + sin(theta/2)|1>.  Angles differing by pi give
// orthogonal states.
PureState great_circle_state(double theta);

// R(delta): rotation within the circle, R(delta) state(t) = state(t+delta).
UnitaryOp rotation(double delta);

// The four-state set at angles {0, pi/2, pi, 3pi/2}.
StateSet bb84_set();

// Pair |phi> = state(0), |phi'> = state(2 acos sqrt(eps1)) with squared
// overlap exactly eps1.
std::pair<PureState, PureState> overlap_pair(double epsilon1);

struct ParityEncoding {
  int n;
  double epsilon1;
  PureState phi;
  PureState phi_prime;

  std::string canonical_text() const;
};

ParityEncoding make_parity_encoding(int n, double epsilon1);

// Tensor codeword: position l carries phi for bit 0, phi' for bit 1.
PureState parity_codeword(const std::vector<int>& bits, const ParityEncoding& enc);

// Uniform mixture over all length-n codewords of parity b, each with weight
// 1/2^(n-1).  Dense; n is capped by kDenseQubitCap.
DensityOp parity_mixture(int b, const ParityEncoding& enc);

// Weighted codeword vectors of parity b (for closed-form / low-rank routes
// beyond the dense cap).
void parity_ensemble(int b, const ParityEncoding& enc,
                     std::vector<double>* weights, std::vector<CVec>* states);

// sum_i sqrt(p_i) |e_i>|phi_i> with |e_i> the computational basis of a fresh
// M-dimensional ancilla prepended to the state dims.
PureState commit_entanglement(const std::vector<double>& probs,
                              const std::vector<PureState>& states);

// sum_k sqrt(lambda_k) |psi_k>|f_k> with the ancilla appended (the |f_k>
// register is kept by the party that prepared the mixture).
PureState purification(const std::vector<double>& weights,
                       const std::vector<PureState>& states);

// sum_l |g_l><g_l| (x) U_l over a complete orthonormal control basis.
UnitaryOp controlled_unitary(const std::vector<PureState>& basis,
                             const std::vector<UnitaryOp>& ops);

}  // namespace qbc

#endif  // QBC_STATE_KIT_HPP_
