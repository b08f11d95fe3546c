#pragma once

#include <cstdint>

#include "treepack/point_set.hpp"

namespace treepack {

// 64-bit linear congruential generator, constants from Knuth's MMIX:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// The full new state is the output. Fixed here so generated instances
// are reproducible across implementations.
struct Lcg64 {
  std::uint64_t state;
  explicit Lcg64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }
};

// Deterministic pseudo-random integer points in [0, span]^2, resampled
// until the set is in general position. Coordinates are drawn as
// next() % (span + 1), x before y. Requires n >= 3 and span >= n^2;
// gives up (CheckError) after one million rejected candidates.
PointSet generate_instance(int n, std::uint64_t seed, std::uint64_t span);

}  // namespace treepack
