// Reproducible random instances.
//
// The stream is SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15,
// then the xor-shift-multiply finalizer. Integers in [lo, hi] are drawn by
// rejection on the top of the 64-bit range, so results are unbiased and
// identical on every platform. Draw order: AP costs objective by objective,
// row-major; KP weights first, then profits objective by objective.
#pragma once

#include <cstdint>

#include "dichotomy/problem.hpp"

namespace dichotomy::generator {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// AP costs uniform in [0,20].
Problem generate_assignment(int p, int n, std::uint64_t seed);

/// KP profits and weights uniform in [1,100], capacity ⌈Σw/2⌉.
Problem generate_knapsack(int p, int n, std::uint64_t seed);

Problem generate(ProblemKind kind, int p, int n, std::uint64_t seed);

}  // namespace dichotomy::generator
