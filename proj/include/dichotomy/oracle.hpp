// Brute-force ground truth: exhaustive outcome enumeration and a definitional
// membership test for the supported extreme nondominated points.
//
// y is kept iff some λ ≥ 1 satisfies λᵀ(y' - y) ≥ 1 for every other
// nondominated y', i.e. y is the unique minimizer of a strictly positive
// weighted sum. The feasibility question is answered by an exact rational
// simplex (Bland's rule) on its Farkas alternative.
#pragma once

#include <stdexcept>
#include <vector>

#include "dichotomy/problem.hpp"
#include "dichotomy/types.hpp"

namespace dichotomy::oracle {

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAssignmentSize = 8;
inline constexpr int kMaxKnapsackSize = 20;

/// Distinct canonical outcomes over all permutations / feasible subsets,
/// lexicographically sorted. Throws OracleRefused above the size caps.
std::vector<OutcomePoint> enumerate_outcomes(const Instance& inst);

/// Nondominated subset (minimization), deduplicated and sorted.
std::vector<OutcomePoint> pareto_filter(std::vector<OutcomePoint> points);

struct Certified {
  OutcomePoint point;
  /// λ ≥ 1 with λᵀ(y' - y) ≥ 1 for every other nondominated y'.
  std::vector<numerics::Rational> lambda;
};

/// Supported extreme nondominated points of Y with their weight certificates,
/// sorted. Every certificate has been re-verified exactly.
std::vector<Certified> oracle_ysn1_certified(const std::vector<OutcomePoint>& points);

std::vector<OutcomePoint> oracle_ysn1(const std::vector<OutcomePoint>& points);

/// Exact check of a certificate against the nondominated set.
bool verify_certificate(const std::vector<std::int64_t>& y, const std::vector<numerics::Rational>& lambda,
                        const std::vector<OutcomePoint>& nondominated);

}  // namespace dichotomy::oracle
