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

#ifndef QBC_RNG_HPP_
#define QBC_RNG_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qbc {

// splitmix64 finalizer (Steele/Lea/Flood mixing constants).  Bijective on
// uint64, so distinct inputs never collide.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ULL;

// Trial seed derivation, bit-exact across platforms:
//   seed_split(m, i) = mix(m + (i + 1) * 0x9E3779B97F4A7C15)
// The increment is an odd constant, so the map i -> seed is injective for
// any fixed master seed.
constexpr std::uint64_t seed_split(std::uint64_t master, std::uint64_t index) {
  return splitmix64_mix(master + (index + 1) * kSplitmixGamma);
}

// Deterministic splitmix64 stream.  All randomness in the library flows
// through this class; std:: distributions are avoided because their outputs
// are not pinned down by the standard.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kSplitmixGamma;
    return splitmix64_mix(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased (Lemire rejection).
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    while (true) {
      const std::uint64_t x = next_u64();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
      const std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (0ULL - n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

  // Samples an index with the given nonnegative weights by CDF inversion.
  std::size_t pick_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("pick_weighted: negative weight");
      total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("pick_weighted: zero total weight");
    const double u = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  // Standard normal via Box-Muller (one value per call; the partner draw is
  // discarded to keep the stream layout simple).
  double next_gaussian();

  // Fisher-Yates sample of k distinct values from [0, n).
  std::vector<int> sample_without_replacement(int n, int k);

 private:
  std::uint64_t state_;
};

}  // namespace qbc

#endif  // QBC_RNG_HPP_
