#include "dichotomy/solvers.hpp"

#include <algorithm>
#include <cmath>

namespace dichotomy::solvers {

namespace {

// Shortest augmenting path with potentials (O(n^3)), 1-indexed internally.
template <class T>
std::vector<int> hungarian_impl(std::span<const T> a, int n) {
  if (a.size() != std::size_t(n) * n) throw std::invalid_argument("hungarian: cost is not n×n");
  std::vector<T> u(n + 1), v(n + 1), minv(n + 1);
  std::vector<int> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1), seen(n + 1);
  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::fill(used.begin(), used.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = row_of[j0];
      int j1 = 0;
      T delta{};
      bool have_delta = false;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        T cur = a[std::size_t(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (!seen[j] || cur < minv[j]) {
          minv[j] = std::move(cur);
          seen[j] = 1;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          have_delta = true;
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> assignment(n);
  for (int j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

template <class T>
std::vector<int> knapsack_impl(std::span<const T> profit, std::span<const std::int64_t> weight,
                               std::int64_t capacity) {
  const std::size_t n = profit.size();
  if (weight.size() != n) throw std::invalid_argument("knapsack: size mismatch");
  const auto cap = std::size_t(std::max<std::int64_t>(capacity, 0));
  std::vector<T> best(cap + 1, T{});
  std::vector<std::vector<char>> take(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(profit[i] > T{}) || weight[i] > capacity) continue;
    take[i].assign(cap + 1, 0);
    const auto w = std::size_t(weight[i]);
    for (std::size_t c = cap; c >= w; --c) {
      T candidate = best[c - w] + profit[i];
      if (candidate > best[c]) {
        best[c] = std::move(candidate);
        take[i][c] = 1;
      }
      if (c == w) break;
    }
  }
  std::vector<int> chosen(n, 0);
  std::size_t c = cap;
  for (std::size_t i = n; i-- > 0;) {
    if (!take[i].empty() && take[i][c]) {
      chosen[i] = 1;
      c -= std::size_t(weight[i]);
    }
  }
  return chosen;
}

constexpr std::int64_t kInt64Headroom = std::int64_t{1} << 58;

// Aggregated coefficients Σ_k λ_k c^k_j for each column j of the stacked costs.
std::vector<BigInt> aggregate_exact(const std::vector<BigInt>& lambda,
                                    const std::vector<std::vector<std::int64_t>>& costs) {
  const std::size_t m = costs.front().size();
  std::vector<BigInt> agg(m);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) agg[j] += lambda[k] * costs[k][j];
  }
  return agg;
}

std::vector<double> aggregate_float(const std::vector<double>& lambda,
                                    const std::vector<std::vector<std::int64_t>>& costs) {
  const std::size_t m = costs.front().size();
  std::vector<double> agg(m, 0.0);
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (std::size_t j = 0; j < m; ++j) agg[j] += lambda[k] * double(costs[k][j]);
  return agg;
}

// Narrows to int64 when every |value| · scale stays below 2^58.
std::optional<std::vector<std::int64_t>> narrow(const std::vector<BigInt>& agg, std::int64_t scale) {
  const BigInt limit = BigInt(kInt64Headroom) / std::max<std::int64_t>(scale, 1);
  std::vector<std::int64_t> out;
  out.reserve(agg.size());
  for (const auto& v : agg) {
    if (abs(v) > limit) return std::nullopt;
    out.push_back(v.convert_to<std::int64_t>());
  }
  return out;
}

void check_weight(const Weight& lambda, std::size_t p) {
  if (lambda.size() != p) throw std::invalid_argument("weight length does not match objective count");
}

}  // namespace

std::vector<int> hungarian(std::span<const std::int64_t> cost, int n) { return hungarian_impl(cost, n); }
std::vector<int> hungarian(std::span<const BigInt> cost, int n) { return hungarian_impl(cost, n); }
std::vector<int> hungarian(std::span<const double> cost, int n) { return hungarian_impl(cost, n); }

std::vector<int> knapsack(std::span<const std::int64_t> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity) {
  return knapsack_impl(profit, weight, capacity);
}
std::vector<int> knapsack(std::span<const BigInt> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity) {
  return knapsack_impl(profit, weight, capacity);
}
std::vector<int> knapsack(std::span<const double> profit, std::span<const std::int64_t> weight,
                          std::int64_t capacity) {
  return knapsack_impl(profit, weight, capacity);
}

AssignmentOracle::AssignmentOracle(const Instance& inst) : inst_(inst) {
  if (inst.kind() != ProblemKind::Assignment) throw std::invalid_argument("AssignmentOracle: not an assignment instance");
}

OutcomePoint AssignmentOracle::solve(const Weight& lambda, RunStats& stats) const {
  check_weight(lambda, objectives());
  ++stats.solver_calls;
  const int n = inst_.n();
  std::vector<int> perm;
  if (lambda.is_exact()) {
    const auto agg = aggregate_exact(lambda.exact_values(), inst_.costs);
    if (auto small = narrow(agg, 8 * std::int64_t(n))) {
      perm = hungarian(std::span<const std::int64_t>(*small), n);
    } else {
      ++stats.wide_calls;
      perm = hungarian(std::span<const BigInt>(agg), n);
    }
  } else {
    ++stats.float_calls;
    const auto agg = aggregate_float(lambda.float_values(), inst_.costs);
    perm = hungarian(std::span<const double>(agg), n);
  }
  return inst_.evaluate(perm);
}

KnapsackOracle::KnapsackOracle(const Instance& inst) : inst_(inst) {
  if (inst.kind() != ProblemKind::Knapsack) throw std::invalid_argument("KnapsackOracle: not a knapsack instance");
}

OutcomePoint KnapsackOracle::solve(const Weight& lambda, RunStats& stats) const {
  check_weight(lambda, objectives());
  ++stats.solver_calls;
  // min λᵀ(U - Cx) = λᵀU - max (λᵀC)x
  const auto& weights = inst_.original.weights;
  const auto cap = inst_.original.capacity;
  std::vector<int> items;
  if (lambda.is_exact()) {
    const auto agg = aggregate_exact(lambda.exact_values(), inst_.costs);
    if (auto small = narrow(agg, std::int64_t(inst_.n()))) {
      items = knapsack(std::span<const std::int64_t>(*small), weights, cap);
    } else {
      ++stats.wide_calls;
      items = knapsack(std::span<const BigInt>(agg), weights, cap);
    }
  } else {
    ++stats.float_calls;
    const auto agg = aggregate_float(lambda.float_values(), inst_.costs);
    items = knapsack(std::span<const double>(agg), weights, cap);
  }
  return inst_.evaluate(items);
}

std::unique_ptr<WeightedSumOracle> make_oracle(const Instance& inst) {
  if (inst.kind() == ProblemKind::Assignment) return std::make_unique<AssignmentOracle>(inst);
  return std::make_unique<KnapsackOracle>(inst);
}

OutcomePoint weighted_sum_solve(const Instance& inst, const Weight& lambda, RunStats& stats) {
  return make_oracle(inst)->solve(lambda, stats);
}

BigInt subproblem_multiplier(const std::vector<BigInt>& lambda_sub, std::size_t p, std::int64_t bound) {
  BigInt max_abs = 1;
  for (const auto& v : lambda_sub) max_abs = std::max(max_abs, BigInt(abs(v)));
  return 1 + max_abs * BigInt(p) * BigInt(bound);
}

Weight subproblem_weight(const Weight& lambda_sub, std::span<const int> subset, std::size_t p,
                         std::int64_t bound, RunStats* stats) {
  if (subset.empty() || subset.size() != lambda_sub.size())
    throw std::invalid_argument("subproblem_weight: subset and weight sizes differ");
  std::vector<char> in_subset(p, 0);
  for (int k : subset) {
    if (k < 0 || std::size_t(k) >= p || in_subset[k]) throw std::invalid_argument("subproblem_weight: bad subset");
    in_subset[k] = 1;
  }
  std::vector<int> rest;
  for (std::size_t k = 0; k < p; ++k)
    if (!in_subset[k]) rest.push_back(int(k));
  const std::size_t levels = rest.size();

  if (lambda_sub.is_exact()) {
    const auto& lam = lambda_sub.exact_values();
    const BigInt m = subproblem_multiplier(lam, p, bound);
    std::vector<BigInt> full(p, 0);
    const BigInt top = boost::multiprecision::pow(m, unsigned(levels));
    for (std::size_t i = 0; i < subset.size(); ++i) full[subset[i]] = lam[i] * top;
    for (std::size_t j = 0; j < levels; ++j)
      full[rest[j]] = boost::multiprecision::pow(m, unsigned(levels - 1 - j));
    return Weight::exact(std::move(full));
  }

  // Float: rescale so the smallest nonzero |λ_k| is 1, then apply the same cascade.
  std::vector<double> lam = lambda_sub.float_values();
  double min_abs = 0.0, max_abs = 0.0;
  for (double v : lam) {
    if (v != 0.0) min_abs = min_abs == 0.0 ? std::abs(v) : std::min(min_abs, std::abs(v));
    max_abs = std::max(max_abs, std::abs(v));
  }
  for (double& v : lam) v /= min_abs;
  max_abs /= min_abs;
  const double m = 1.0 + std::max(1.0, max_abs) * double(p) * double(bound);
  const double top = std::pow(m, double(levels));
  std::vector<double> full(p, 0.0);
  double magnitude = 0.0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    full[subset[i]] = lam[i] * top;
    magnitude = std::max(magnitude, std::abs(full[subset[i]]));
  }
  for (std::size_t j = 0; j < levels; ++j) full[rest[j]] = std::pow(m, double(levels - 1 - j));
  if (stats && magnitude > 0x1p52) ++stats->reduced_reliability;
  return Weight::floating(std::move(full));
}

}  // namespace dichotomy::solvers
