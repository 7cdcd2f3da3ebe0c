#include "dichotomy/problem.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dichotomy {

void Problem::validate() const {
  if (p < 1) throw InvalidProblem("objective count must be >= 1");
  if (n < 1) throw InvalidProblem("problem size must be >= 1");
  if (objectives.size() != std::size_t(p))
    throw InvalidProblem("expected " + std::to_string(p) + " objectives");
  const std::size_t per = kind == ProblemKind::Assignment ? std::size_t(n) * n : std::size_t(n);
  for (const auto& obj : objectives) {
    if (obj.size() != per) throw InvalidProblem("objective has wrong number of coefficients");
    if (std::any_of(obj.begin(), obj.end(), [](std::int64_t c) { return c < 0; }))
      throw InvalidProblem("negative objective coefficient");
  }
  if (kind == ProblemKind::Knapsack) {
    if (weights.size() != std::size_t(n)) throw InvalidProblem("knapsack needs n item weights");
    if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w < 1; }))
      throw InvalidProblem("knapsack weights must be positive integers");
    if (capacity < 1) throw InvalidProblem("knapsack capacity must be a positive integer");
  }
}

Instance canonicalize(const Problem& raw) {
  raw.validate();
  Instance inst;
  inst.original = raw;
  inst.costs = raw.objectives;
  inst.translation.assign(raw.p, 0);
  if (raw.kind == ProblemKind::Assignment) {
    inst.sign = 1;
    const bool has_zero = std::any_of(raw.objectives.begin(), raw.objectives.end(), [](const auto& c) {
      return std::find(c.begin(), c.end(), 0) != c.end();
    });
    if (has_zero) {
      for (auto& c : inst.costs)
        for (auto& v : c) v += 1;
      std::fill(inst.translation.begin(), inst.translation.end(), raw.n);
    }
  } else {
    inst.sign = -1;
    for (int k = 0; k < raw.p; ++k)
      inst.translation[k] = 1 + std::accumulate(raw.objectives[k].begin(), raw.objectives[k].end(),
                                                std::int64_t{0});
  }
  return inst;
}

std::int64_t Instance::outcome_bound() const {
  if (kind() == ProblemKind::Assignment) {
    std::int64_t mx = 0;
    for (const auto& c : costs) mx = std::max(mx, *std::max_element(c.begin(), c.end()));
    return std::max<std::int64_t>(1, n() * mx);
  }
  return *std::max_element(translation.begin(), translation.end());
}

std::vector<std::int64_t> Instance::to_original(const std::vector<std::int64_t>& y) const {
  std::vector<std::int64_t> out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = sign * (y[k] - translation[k]);
  return out;
}

std::vector<std::int64_t> Instance::from_original(const std::vector<std::int64_t>& y) const {
  std::vector<std::int64_t> out(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = translation[k] + sign * y[k];
  return out;
}

OutcomePoint Instance::evaluate(const std::vector<int>& solution) const {
  const int np = p(), nn = n();
  OutcomePoint out;
  out.y.assign(np, 0);
  if (kind() == ProblemKind::Assignment) {
    for (int k = 0; k < np; ++k)
      for (int i = 0; i < nn; ++i) out.y[k] += costs[k][std::size_t(i) * nn + solution[i]];
  } else {
    for (int k = 0; k < np; ++k) {
      std::int64_t profit = 0;
      for (int i = 0; i < nn; ++i)
        if (solution[i]) profit += costs[k][i];
      out.y[k] = translation[k] - profit;
    }
  }
  out.solution = solution;
  return out;
}

}  // namespace dichotomy
