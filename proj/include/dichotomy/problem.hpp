// Multi-objective assignment (pAP) and knapsack (pKP) problems, and their
// canonical minimization form with strictly positive outcomes.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dichotomy/types.hpp"

namespace dichotomy {

enum class ProblemKind { Assignment, Knapsack };

class InvalidProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A problem exactly as read from disk: assignment costs are minimized,
/// knapsack profits are maximized.
struct Problem {
  ProblemKind kind = ProblemKind::Assignment;
  int p = 0;
  int n = 0;
  /// Assignment: p row-major n×n cost matrices. Knapsack: p profit vectors.
  std::vector<std::vector<std::int64_t>> objectives;
  std::vector<std::int64_t> weights;  // knapsack only
  std::int64_t capacity = 0;          // knapsack only

  /// Throws InvalidProblem with a message on any violated constraint.
  void validate() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

/// Canonical minimization instance. Each canonical objective relates to the
/// original one by y_canon = translation + sign·y_orig.
struct Instance {
  Problem original;
  /// Assignment: costs after the optional +1 shift. Knapsack: original profits.
  std::vector<std::vector<std::int64_t>> costs;
  std::vector<std::int64_t> translation;
  int sign = 1;

  ProblemKind kind() const { return original.kind; }
  int p() const { return original.p; }
  int n() const { return original.n; }

  /// Upper bound B on any canonical objective value over the feasible set.
  std::int64_t outcome_bound() const;

  std::vector<std::int64_t> to_original(const std::vector<std::int64_t>& y) const;
  std::vector<std::int64_t> from_original(const std::vector<std::int64_t>& y) const;

  /// Canonical outcome of a solution (permutation or 0/1 item vector).
  OutcomePoint evaluate(const std::vector<int>& solution) const;
};

/// Assignment costs get +1 everywhere if any cost is 0; knapsack objective k
/// becomes U_k - y_k with U_k = 1 + sum of its profits.
Instance canonicalize(const Problem& raw);

}  // namespace dichotomy
