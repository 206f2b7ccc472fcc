// Copyright 2026 The Triad Authors
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

#pragma once

#include <cstdint>

namespace triad {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Purpose tags for substream derivation. Values are part of the
// reproducibility contract: changing one changes every seeded output.
enum class Role : std::uint64_t {
  kEdgeSample = 1,
  kWeightedPick = 2,
  kNeighborSample = 3,
  kAssignmentSample = 4,
  kIdealEdge = 5,
  kIdealNeighbor = 6,
  kRepetition = 7,
  kShuffle = 8,
  kGenerator = 9,
  kDisjStrings = 10,
};

inline std::uint64_t derive_key(std::uint64_t seed, Role role, std::uint64_t a = 0,
                                std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(role));
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b * 0xD6E8FEB86659FD93ULL));
  return h;
}

// Counter-based generator: output j of the substream keyed by
// (seed, role, a, b) is a pure function of those four values and j, so
// batched samplers never share mutable state.
class KeyedRng {
 public:
  KeyedRng() = default;
  explicit KeyedRng(std::uint64_t key) : key_(key) {}
  KeyedRng(std::uint64_t seed, Role role, std::uint64_t a = 0, std::uint64_t b = 0)
      : key_(derive_key(seed, role, a, b)) {}

  std::uint64_t next() { return splitmix64(key_ ^ (++counter_ * 0xA0761D6478BD642FULL)); }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1].
  double uniform_positive() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

  // Satisfies UniformRandomBitGenerator so std::shuffle-style algorithms
  // can be driven by it.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Fisher-Yates with KeyedRng::below; std::shuffle's draw pattern is
// implementation-defined, which would break cross-platform replay.
template <typename RandomIt>
void shuffle_deterministic(RandomIt first, RandomIt last, KeyedRng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const std::uint64_t j = rng.below(i);
    using std::swap;
    swap(first[i - 1], first[j]);
  }
}

}  // namespace triad
