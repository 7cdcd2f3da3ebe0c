// Single-objective weighted-sum oracles: min λᵀz(x) over the feasible set.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dichotomy/problem.hpp"
#include "dichotomy/types.hpp"

namespace dichotomy::solvers {

/// Pluggable weighted-sum oracle. Implementations must return an optimal
/// point for any nonzero weight (components of either sign).
class WeightedSumOracle {
 public:
  virtual ~WeightedSumOracle() = default;
  virtual std::size_t objectives() const = 0;
  /// Upper bound on every canonical objective value; outcomes lie in [1, B]^p.
  virtual std::int64_t outcome_bound() const = 0;
  /// Increments stats.solver_calls, and float_calls/wide_calls as applicable.
  virtual OutcomePoint solve(const Weight& lambda, RunStats& stats) const = 0;
};

class AssignmentOracle final : public WeightedSumOracle {
 public:
  explicit AssignmentOracle(const Instance& inst);
  std::size_t objectives() const override { return std::size_t(inst_.p()); }
  std::int64_t outcome_bound() const override { return inst_.outcome_bound(); }
  OutcomePoint solve(const Weight& lambda, RunStats& stats) const override;

 private:
  const Instance& inst_;
};

class KnapsackOracle final : public WeightedSumOracle {
 public:
  explicit KnapsackOracle(const Instance& inst);
  std::size_t objectives() const override { return std::size_t(inst_.p()); }
  std::int64_t outcome_bound() const override { return inst_.outcome_bound(); }
  OutcomePoint solve(const Weight& lambda, RunStats& stats) const override;

 private:
  const Instance& inst_;
};

/// The oracle for the instance's problem class; `inst` must outlive it.
std::unique_ptr<WeightedSumOracle> make_oracle(const Instance& inst);

OutcomePoint weighted_sum_solve(const Instance& inst, const Weight& lambda, RunStats& stats);

/// Minimum-cost perfect assignment on a row-major n×n matrix; returns the
/// column assigned to each row. Costs may be negative.
std::vector<int> hungarian(std::span<const std::int64_t> cost, int n);
std::vector<int> hungarian(std::span<const BigInt> cost, int n);
std::vector<int> hungarian(std::span<const double> cost, int n);

/// 0/1 knapsack maximizing total profit; items with profit <= 0 are never
/// taken. Returns the 0/1 vector.
std::vector<int> knapsack(std::span<const std::int64_t> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity);
std::vector<int> knapsack(std::span<const BigInt> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity);
std::vector<int> knapsack(std::span<const double> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity);

/// Big-M multiplier used by subproblem_weight: 1 + max|λ_k| · p · bound.
BigInt subproblem_multiplier(const std::vector<BigInt>& lambda_sub, std::size_t p, std::int64_t bound);

/// Full-length weight that solves min λ_subᵀ z_I and breaks ties
/// lexicographically on the remaining objectives in ascending index order:
/// λ_k·M^r on k in `subset`, M^(r-1-j) on the j-th remaining objective.
Weight subproblem_weight(const Weight& lambda_sub, std::span<const int> subset, std::size_t p,
                         std::int64_t bound, RunStats* stats = nullptr);

}  // namespace dichotomy::solvers
