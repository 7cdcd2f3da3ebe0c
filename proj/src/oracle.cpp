#include "dichotomy/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace dichotomy::oracle {

using numerics::Rational;

namespace {

// Dense tableau for  max cᵀx  s.t.  Gx ≤ h, x ≥ 0  with h ≥ 0, so the slack
// basis is feasible. Columns are the structural variables then one slack per
// row. Returns the optimum and the row duals.
struct SimplexResult {
  Rational value;
  std::vector<Rational> duals;
};

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& g, const std::vector<Rational>& h,
                          const std::vector<Rational>& c) {
  const std::size_t rows = g.size();
  const std::size_t vars = c.size();
  const std::size_t cols = vars + rows;

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = g[i][j];
    t[i][vars + i] = 1;
    t[i][cols] = h[i];
  }
  // Reduced-cost row: z_j - c_j.
  std::vector<Rational> z(cols + 1);
  for (std::size_t j = 0; j < vars; ++j) z[j] = -c[j];
  std::vector<std::size_t> basic(rows);
  std::iota(basic.begin(), basic.end(), vars);

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][e] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][e];
      if (!leave || ratio < best || (ratio == best && basic[i] < basic[*leave])) {
        leave = i;
        best = std::move(ratio);
      }
    }
    if (!leave) throw std::logic_error("oracle simplex: unbounded program");
    const std::size_t r = *leave;

    const Rational pivot = t[r][e];
    for (auto& v : t[r]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][e] == 0) continue;
      const Rational f = t[i][e];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    if (z[e] != 0) {
      const Rational f = z[e];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t[r][j] != 0) z[j] -= f * t[r][j];
    }
    basic[r] = e;
  }

  SimplexResult res;
  res.value = z[cols];
  for (std::size_t i = 0; i < rows; ++i) res.duals.push_back(z[vars + i]);
  return res;
}

// Certificate for y against the other nondominated points, or nothing.
//
// With λ = 1 + μ and A_i = y'_i - y, feasibility reads  Aμ ≥ b, μ ≥ 0  where
// b_i = 1 - ΣA_i. Its Farkas alternative, normalized by Σw ≤ 1, is
//   max bᵀw  s.t.  Aᵀw ≤ 0, Σw ≤ 1, w ≥ 0,
// whose optimum is 0 exactly when the system is feasible; the duals of the
// first p rows are then a feasible μ.
std::optional<std::vector<Rational>> certify(const std::vector<std::int64_t>& y,
                                             const std::vector<OutcomePoint>& others) {
  const std::size_t p = y.size();
  if (others.empty()) return std::vector<Rational>(p, Rational(1));
  const std::size_t m = others.size();

  std::vector<std::vector<Rational>> g(p + 1, std::vector<Rational>(m));
  std::vector<Rational> h(p + 1, Rational(0));
  std::vector<Rational> c(m);
  h[p] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t k = 0; k < p; ++k) {
      const std::int64_t a = others[i].y[k] - y[k];
      g[k][i] = a;
      row_sum += a;
    }
    g[p][i] = 1;
    c[i] = 1 - row_sum;
  }
  const SimplexResult res = simplex_max(g, h, c);
  if (res.value != 0) return std::nullopt;
  std::vector<Rational> lambda(p);
  for (std::size_t k = 0; k < p; ++k) lambda[k] = 1 + res.duals[k];
  return lambda;
}

}  // namespace

std::vector<OutcomePoint> enumerate_outcomes(const Instance& inst) {
  const int n = inst.n();
  std::set<std::vector<std::int64_t>> seen;
  std::vector<OutcomePoint> out;
  auto record = [&](const std::vector<int>& sol) {
    OutcomePoint y = inst.evaluate(sol);
    if (seen.insert(y.y).second) out.push_back(std::move(y));
  };

  if (inst.kind() == ProblemKind::Assignment) {
    if (n > kMaxAssignmentSize)
      throw OracleRefused("assignment enumeration refused for n > " + std::to_string(kMaxAssignmentSize));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do record(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    if (n > kMaxKnapsackSize)
      throw OracleRefused("knapsack enumeration refused for n > " + std::to_string(kMaxKnapsackSize));
    const auto& w = inst.original.weights;
    std::vector<int> items(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      std::int64_t load = 0;
      for (int i = 0; i < n; ++i) {
        items[i] = (mask >> i) & 1;
        if (items[i]) load += w[i];
      }
      if (load <= inst.original.capacity) record(items);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  return out;
}

std::vector<OutcomePoint> pareto_filter(std::vector<OutcomePoint> points) {
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.y < b.y; });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  // After lexicographic sorting any dominator precedes the point it dominates.
  std::vector<OutcomePoint> kept;
  for (auto& y : points) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const OutcomePoint& o) {
      for (std::size_t k = 0; k < y.y.size(); ++k)
        if (o.y[k] > y.y[k]) return false;
      return true;
    });
    if (!dominated) kept.push_back(std::move(y));
  }
  return kept;
}

bool verify_certificate(const std::vector<std::int64_t>& y, const std::vector<Rational>& lambda,
                        const std::vector<OutcomePoint>& nondominated) {
  if (lambda.size() != y.size()) return false;
  if (std::any_of(lambda.begin(), lambda.end(), [](const Rational& v) { return v < 1; })) return false;
  for (const auto& o : nondominated) {
    if (o.y == y) continue;
    Rational gap = 0;
    for (std::size_t k = 0; k < y.size(); ++k) gap += lambda[k] * (o.y[k] - y[k]);
    if (gap < 1) return false;
  }
  return true;
}

std::vector<Certified> oracle_ysn1_certified(const std::vector<OutcomePoint>& points) {
  const auto nd = pareto_filter(points);
  std::vector<Certified> out;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    std::vector<OutcomePoint> others;
    others.reserve(nd.size() - 1);
    for (std::size_t j = 0; j < nd.size(); ++j)
      if (j != i) others.push_back(nd[j]);
    auto lambda = certify(nd[i].y, others);
    if (!lambda) continue;
    if (!verify_certificate(nd[i].y, *lambda, nd))
      throw std::logic_error("oracle produced an invalid certificate");
    out.push_back({nd[i], std::move(*lambda)});
  }
  return out;
}

std::vector<OutcomePoint> oracle_ysn1(const std::vector<OutcomePoint>& points) {
  std::vector<OutcomePoint> out;
  for (auto& c : oracle_ysn1_certified(points)) out.push_back(std::move(c.point));
  return out;
}

}  // namespace dichotomy::oracle
