#include <numeric>
#include <random>

#include "doctest.h"
#include "dichotomy/generator.hpp"
#include "dichotomy/solvers.hpp"
#include "support.hpp"

using namespace dichotomy;
using namespace dichotomy::solvers;
using testing_support::Vec;

namespace {

std::int64_t assignment_cost(const std::vector<std::int64_t>& c, const std::vector<int>& perm) {
  const auto n = perm.size();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += c[i * n + perm[i]];
  return s;
}

Weight W(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return Weight::exact(v);
}

}  // namespace

TEST_CASE("hungarian matches brute force over all permutations") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> d(-100, 100);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 7;
    std::vector<std::int64_t> c(std::size_t(n) * n);
    for (auto& v : c) v = d(rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = INT64_MAX;
    do best = std::min(best, assignment_cost(c, perm));
    while (std::next_permutation(perm.begin(), perm.end()));

    const auto a = hungarian(std::span<const std::int64_t>(c), n);
    CHECK(assignment_cost(c, a) == best);
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) CHECK(sorted[i] == i);

    std::vector<BigInt> cb(c.begin(), c.end());
    CHECK(assignment_cost(c, hungarian(std::span<const BigInt>(cb), n)) == best);
    std::vector<double> cd(c.begin(), c.end());
    CHECK(assignment_cost(c, hungarian(std::span<const double>(cd), n)) == best);
  }
}

TEST_CASE("knapsack DP matches brute force over all subsets") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> prof(-100, 100), wt(1, 60);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 18;
    std::vector<std::int64_t> p(n), w(n);
    for (auto& v : p) v = prof(rng);
    for (auto& v : w) v = wt(rng);
    const std::int64_t cap = std::accumulate(w.begin(), w.end(), std::int64_t{0}) / 2;
    std::int64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::int64_t pw = 0, ww = 0;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) pw += p[i], ww += w[i];
      if (ww <= cap) best = std::max(best, pw);
    }
    const auto x = knapsack(std::span<const std::int64_t>(p), w, cap);
    std::int64_t pw = 0, ww = 0;
    for (int i = 0; i < n; ++i)
      if (x[i]) pw += p[i], ww += w[i];
    CHECK(ww <= cap);
    CHECK(pw == best);
    for (int i = 0; i < n; ++i)
      if (p[i] <= 0) CHECK(x[i] == 0);
  }
}

TEST_CASE("Example 1 weighted-sum solves") {
  const Instance inst = canonicalize(testing_support::example1());
  CHECK(inst.costs == inst.original.objectives);
  RunStats st;
  CHECK(weighted_sum_solve(inst, W({1, 1, 3}), st).y == Vec{13, 16, 11});
  CHECK(weighted_sum_solve(inst, W({1, -40, -28}), st).y == Vec{16, 20, 16});
  const auto first = weighted_sum_solve(inst, W({1, 0, 0}), st);
  CHECK(first.y[0] == 11);
  const auto tie = weighted_sum_solve(inst, W({-1, 40, 28}), st).y;
  const std::vector<Vec> plane{{11, 11, 14}, {15, 9, 17}, {19, 14, 10}};
  CHECK(std::find(plane.begin(), plane.end(), tie) != plane.end());
  CHECK(st.solver_calls == 4);
  CHECK(st.float_calls == 0);

  const auto fl = weighted_sum_solve(inst, Weight::floating({1.0, 1.0, 3.0}), st);
  CHECK(fl.y == Vec{13, 16, 11});
  CHECK(st.float_calls == 1);
}

TEST_CASE("returned outcome is consistent with the returned solution") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int t = 0; t < 40; ++t) {
    const bool ap = t % 2 == 0;
    const Instance inst = canonicalize(ap ? generator::generate_assignment(3, 6, t) : generator::generate_knapsack(3, 10, t));
    const Weight w = W({d(rng), d(rng), d(rng) + 101});
    RunStats st;
    const auto y = weighted_sum_solve(inst, w, st);
    REQUIRE(y.solution.has_value());
    CHECK(inst.evaluate(*y.solution).y == y.y);
    for (auto v : y.y) CHECK(v > 0);
  }
}

TEST_CASE("canonicalize") {
  Problem kp;
  kp.kind = ProblemKind::Knapsack;
  kp.p = 1;
  kp.n = 2;
  kp.objectives = {{3, 5}};
  kp.weights = {1, 1};
  kp.capacity = 1;
  const Instance inst = canonicalize(kp);
  CHECK(inst.translation == std::vector<std::int64_t>{9});
  CHECK(inst.evaluate({1, 0}).y == Vec{6});
  CHECK(inst.evaluate({0, 1}).y == Vec{4});
  CHECK(inst.evaluate({0, 0}).y == Vec{9});
  CHECK(inst.to_original({4}) == Vec{5});
  CHECK(inst.from_original(inst.to_original({6})) == Vec{6});

  Problem ap;
  ap.p = 2;
  ap.n = 2;
  ap.objectives = {{0, 1, 2, 3}, {1, 1, 1, 1}};
  const Instance shifted = canonicalize(ap);
  CHECK(shifted.costs[0] == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(shifted.evaluate({0, 1}).y == Vec{5, 4});
  CHECK(shifted.to_original({5, 4}) == Vec{3, 2});

  ap.objectives[0][0] = -1;
  CHECK_THROWS_AS(canonicalize(ap), InvalidProblem);
}

TEST_CASE("subproblem_weight") {
  // Example 1: B = 4*6 = 24, M = 1 + 1*3*24 = 73.
  const std::vector<int> sub{0, 1};
  CHECK(subproblem_multiplier({1, 1}, 3, 24) == 73);
  CHECK(subproblem_weight(W({1, 1}), sub, 3, 24) == W({73, 73, 1}));
  const std::vector<int> first{0};
  const auto lex = subproblem_weight(W({1}), first, 2, 10);
  CHECK(lex == W({21, 1}));  // M = 1 + 1*2*10
  const std::vector<int> mid{1};
  CHECK(subproblem_weight(W({1}), mid, 3, 10) == W({31, 31 * 31, 1}));
  CHECK_THROWS_AS(subproblem_weight(W({1, 1}), first, 3, 10), std::invalid_argument);
}

TEST_CASE("subproblem_weight solves equal a two-stage lexicographic solve") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(1, 9);
  for (int t = 0; t < 20; ++t) {
    const bool ap = t % 2 == 0;
    const Instance inst = canonicalize(ap ? generator::generate_assignment(3, 5, 100 + t)
                                          : generator::generate_knapsack(3, 10, 100 + t));
    const auto B = inst.outcome_bound();
    const std::vector<int> sub{0, 2};
    const Weight lam = W({d(rng), d(rng)});
    RunStats st;
    const auto y = weighted_sum_solve(inst, subproblem_weight(lam, sub, 3, B), st);

    // Two stages: best λ-value on the subset, then min z_2 among those.
    const auto& l = lam.exact_values();
    std::vector<Vec> outcomes;
    if (ap) {
      std::vector<int> perm(inst.n());
      std::iota(perm.begin(), perm.end(), 0);
      do outcomes.push_back(inst.evaluate(perm).y);
      while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (std::uint32_t mask = 0; mask < (1u << inst.n()); ++mask) {
        std::vector<int> x(inst.n());
        std::int64_t load = 0;
        for (int i = 0; i < inst.n(); ++i)
          if ((x[i] = mask >> i & 1)) load += inst.original.weights[i];
        if (load <= inst.original.capacity) outcomes.push_back(inst.evaluate(x).y);
      }
    }
    auto value = [&](const Vec& z) -> BigInt { return l[0] * z[0] + l[1] * z[2]; };
    BigInt best = value(outcomes.front());
    for (const auto& z : outcomes) best = std::min(best, value(z));
    std::int64_t best_rest = INT64_MAX;
    for (const auto& z : outcomes)
      if (value(z) == best) best_rest = std::min(best_rest, z[1]);
    CHECK(value(y.y) == best);
    CHECK(y.y[1] == best_rest);
  }
}

TEST_CASE("float composite weights report reduced reliability") {
  RunStats st;
  const std::vector<int> sub{0};
  subproblem_weight(Weight::floating({1.0}), sub, 5, 1 << 20, &st);
  CHECK(st.reduced_reliability == 1);
  RunStats small;
  subproblem_weight(Weight::floating({2.0}), sub, 3, 24, &small);
  CHECK(small.reduced_reliability == 0);
}

TEST_CASE("exact mode never uses the float pathway") {
  for (int t = 0; t < 10; ++t) {
    const Instance inst = canonicalize(generator::generate_assignment(4, 8, t));
    RunStats st;
    // Large weights force the wide integer path but never floats.
    weighted_sum_solve(inst, W({1, 1, 1, 1}), st);
    std::vector<BigInt> big{BigInt(1) << 70, 3, BigInt(1) << 65, 1};
    weighted_sum_solve(inst, Weight::exact(big), st);
    CHECK(st.float_calls == 0);
    CHECK(st.wide_calls == 1);
  }
}
