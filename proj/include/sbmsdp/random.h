// Copyright 2026 The sbmsdp Authors.
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

#ifndef SBMSDP_RANDOM_H_
#define SBMSDP_RANDOM_H_

#include <cstdint>
#include <random>

namespace sbmsdp {

// Name of the generator recorded in output files so runs can be reproduced.
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64";

// SplitMix64 finalizer. Used to derive independent stream seeds from
// (base seed, index...) tuples.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a) {
  return splitmix64(splitmix64(base) ^ splitmix64(a + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b) {
  return mix_seed(mix_seed(base, a), b);
}

// Portable random stream. The standard distributions are implementation
// defined, so uniforms are built directly from the raw 64-bit output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling keeps the result unbiased.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sbmsdp

#endif  // SBMSDP_RANDOM_H_
