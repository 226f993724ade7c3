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

#include "qbc/rng.hpp"

#include <cmath>
#include <numeric>

namespace qbc {

double Rng::next_gaussian() {
  // Box-Muller; u is kept away from 0 so the log is finite.
  const double u = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double v = next_double();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925287 * v);
}

std::vector<int> Rng::sample_without_replacement(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: bad k");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace qbc
