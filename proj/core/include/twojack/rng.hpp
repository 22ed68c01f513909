// Copyright 2026 The twojack Authors
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

#ifndef TWOJACK_RNG_HPP_
#define TWOJACK_RNG_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace twojack {

// Generator identity written into reports that depend on random draws.
inline constexpr std::string_view kGeneratorId =
    "xoshiro256**/splitmix64-keyed v1";

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Folds a root seed and a path of indices into a 64-bit stream key.
///
///   h = mix64(seed ^ 0x6A09E667F3BCC909)
///   h = mix64(h ^ mix64(w + 0x9E3779B97F4A7C15))   for each w in path
std::uint64_t derive_key(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> path) noexcept;

/// xoshiro256** seeded from a stream key through four SplitMix64 steps.
///
/// Every (seed, path) pair names an independent substream, so replicate i
/// draws the same numbers no matter which worker evaluates it. Satisfies
/// UniformRandomBitGenerator for use with <random> distributions.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) noexcept;

  static Rng substream(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> path) noexcept {
    return Rng(derive_key(seed, path));
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound) by multiply-shift with rejection
  /// (Lemire). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace twojack

#endif  // TWOJACK_RNG_HPP_
