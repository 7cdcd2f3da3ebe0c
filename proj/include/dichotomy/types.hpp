// Value types shared by every layer: outcome vectors, scalarization weights,
// run counters and arithmetic configuration.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dichotomy/numerics.hpp"

namespace dichotomy {

using numerics::BigInt;

enum class Arithmetic { Exact, Float };

/// Float-mode tolerances. All are relative to the magnitude noted.
struct FloatTolerances {
  double visibility = 1e-9;  ///< beyond test: normal·x - offset < -visibility·(1+|offset|)
  double positivity = 1e-12; ///< normal component counts as positive above this
  double equality = 1e-7;    ///< λᵀy = λᵀy' test, relative to max(1,|λᵀy'|)
  double rank = 1e-12;       ///< affine-independence test while the hull is pending
};

struct ExactArithmetic {
  using Scalar = BigInt;
  static constexpr bool exact = true;
};

struct FloatArithmetic {
  using Scalar = double;
  static constexpr bool exact = false;
};

/// Image of a feasible solution in the canonical (minimization) outcome space.
struct OutcomePoint {
  std::vector<std::int64_t> y;
  /// Assignment: column assigned to each row. Knapsack: 0/1 per item.
  std::optional<std::vector<int>> solution;

  friend bool operator==(const OutcomePoint& a, const OutcomePoint& b) { return a.y == b.y; }
};

/// A scalarization direction. Exact weights are gcd-reduced integers; float
/// weights are arbitrary finite doubles.
class Weight {
 public:
  static Weight exact(std::vector<BigInt> lambda);
  static Weight floating(std::vector<double> lambda);

  bool is_exact() const { return std::holds_alternative<std::vector<BigInt>>(data_); }
  std::size_t size() const;
  const std::vector<BigInt>& exact_values() const { return std::get<std::vector<BigInt>>(data_); }
  const std::vector<double>& float_values() const { return std::get<std::vector<double>>(data_); }

  /// True iff every component is strictly positive (> eps for float weights).
  bool strictly_positive(double eps = 0.0) const;

  /// λᵀy, exact weights only.
  BigInt exact_value(const std::vector<std::int64_t>& y) const;
  /// λᵀy in double (any weight).
  double float_value(const std::vector<std::int64_t>& y) const;

  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  explicit Weight(std::variant<std::vector<BigInt>, std::vector<double>> d) : data_(std::move(d)) {}
  std::variant<std::vector<BigInt>, std::vector<double>> data_;
};

/// Counters reported for each run. Plain counters: each worker owns its own
/// instance and merges at the end.
struct RunStats {
  std::uint64_t solver_calls = 0;
  std::uint64_t float_calls = 0;
  /// Exact calls whose aggregated costs exceeded 64 bits.
  std::uint64_t wide_calls = 0;
  std::uint64_t init_solver_calls = 0;
  std::uint64_t extreme_points_found = 0;
  /// Selected facets whose normal was not strictly positive (dummy_dichotomy only).
  std::uint64_t positivity_violations = 0;
  /// Float composite weights whose magnitude exceeded 2^52.
  std::uint64_t reduced_reliability = 0;
  double wall_time_s = 0.0;
  std::vector<std::string> warnings;

  void merge(const RunStats& other);
};

}  // namespace dichotomy
