// Shared test helpers: an explicit point-list oracle, a naive hull-vertex
// oracle and small random generators.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "dichotomy/io.hpp"
#include "dichotomy/numerics.hpp"
#include "dichotomy/solvers.hpp"

namespace testing_support {

using dichotomy::BigInt;
using dichotomy::OutcomePoint;
using Vec = std::vector<std::int64_t>;

inline dichotomy::Problem example1() { return dichotomy::io::read_instance(FIXTURE_DIR "/example1.moap"); }

inline std::vector<Vec> example1_ysn1() { return {{11, 11, 14}, {13, 16, 11}, {15, 9, 17}, {19, 14, 10}}; }

inline std::vector<Vec> sorted(const std::vector<OutcomePoint>& pts) {
  std::vector<Vec> out;
  for (const auto& y : pts) out.push_back(y.y);
  std::sort(out.begin(), out.end());
  return out;
}

// Weighted-sum oracle over an explicit outcome list. Ties go to the
// lexicographically smallest point.
class ListOracle final : public dichotomy::solvers::WeightedSumOracle {
 public:
  explicit ListOracle(std::vector<Vec> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    for (const auto& y : points_)
      for (auto v : y) bound_ = std::max(bound_, v);
  }
  std::size_t objectives() const override { return points_.front().size(); }
  std::int64_t outcome_bound() const override { return bound_; }
  OutcomePoint solve(const dichotomy::Weight& w, dichotomy::RunStats& stats) const override {
    ++stats.solver_calls;
    std::size_t best = 0;
    if (w.is_exact()) {
      BigInt best_v = w.exact_value(points_[0]);
      for (std::size_t i = 1; i < points_.size(); ++i) {
        BigInt v = w.exact_value(points_[i]);
        if (v < best_v) best_v = v, best = i;
      }
    } else {
      ++stats.float_calls;
      double best_v = w.float_value(points_[0]);
      for (std::size_t i = 1; i < points_.size(); ++i) {
        double v = w.float_value(points_[i]);
        if (v < best_v) best_v = v, best = i;
      }
    }
    return OutcomePoint{points_[best], std::nullopt};
  }

 private:
  std::vector<Vec> points_;
  std::int64_t bound_ = 1;
};

// Indices of the extreme points of a full-dimensional integer point set:
// every p-subset spanning a supporting hyperplane is a candidate facet, and a
// point is a vertex iff the supporting normals through it have rank p.
inline std::set<Vec> naive_vertices(const std::vector<Vec>& pts) {
  const std::size_t p = pts.front().size();
  const std::size_t m = pts.size();
  std::vector<std::vector<std::vector<BigInt>>> normals_at(m);
  std::vector<std::size_t> idx(p);
  std::vector<char> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + long(std::min(p, m)), 1);
  if (m < p) return {};
  do {
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) idx[c++] = i;
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t j = 1; j < p; ++j) {
      std::vector<BigInt> r(p);
      for (std::size_t k = 0; k < p; ++k) r[k] = BigInt(pts[idx[j]][k]) - pts[idx[0]][k];
      rows.push_back(r);
    }
    auto normal = dichotomy::numerics::cross(rows);
    if (std::all_of(normal.begin(), normal.end(), [](const BigInt& v) { return v == 0; })) continue;
    const BigInt level = dichotomy::numerics::dot(normal, pts[idx[0]]);
    bool pos = false, neg = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt s = dichotomy::numerics::dot(normal, pts[i]) - level;
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) on.push_back(i);
    }
    if (pos && neg) continue;
    for (std::size_t i : on) normals_at[i].push_back(normal);
  } while (std::prev_permutation(pick.begin(), pick.end()));

  std::set<Vec> out;
  for (std::size_t i = 0; i < m; ++i)
    if (!normals_at[i].empty() && dichotomy::numerics::rank(normals_at[i]) == p) out.insert(pts[i]);
  return out;
}

inline bool full_dimensional(const std::vector<Vec>& pts) {
  std::vector<std::vector<BigInt>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<BigInt> r;
    for (std::size_t k = 0; k < pts[0].size(); ++k) r.push_back(BigInt(pts[i][k]) - pts[0][k]);
    rows.push_back(r);
  }
  return !rows.empty() && dichotomy::numerics::rank(rows) == pts[0].size();
}

inline std::vector<Vec> random_points(std::mt19937_64& rng, std::size_t p, std::size_t count, std::int64_t lo,
                                      std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<Vec> pts(count, Vec(p));
  for (auto& y : pts)
    for (auto& v : y) v = d(rng);
  return pts;
}

}  // namespace testing_support
