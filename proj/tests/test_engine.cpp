#include <chrono>
#include <map>

#include "doctest.h"
#include "dichotomy/engine.hpp"
#include "dichotomy/generator.hpp"
#include "dichotomy/geometry.hpp"
#include "dichotomy/oracle.hpp"
#include "support.hpp"

using namespace dichotomy;
using namespace dichotomy::engine;
using testing_support::ListOracle;
using testing_support::sorted;
using testing_support::Vec;

namespace {

// Records every point returned by the wrapped oracle.
class Recording final : public solvers::WeightedSumOracle {
 public:
  explicit Recording(const solvers::WeightedSumOracle& inner) : inner_(inner) {}
  std::size_t objectives() const override { return inner_.objectives(); }
  std::int64_t outcome_bound() const override { return inner_.outcome_bound(); }
  OutcomePoint solve(const Weight& w, RunStats& stats) const override {
    auto y = inner_.solve(w, stats);
    returned.push_back(y.y);
    return y;
  }
  mutable std::vector<Vec> returned;

 private:
  const solvers::WeightedSumOracle& inner_;
};

// Returns the worst point instead of the best one for weights whose first
// component exceeds the others.
class Liar final : public solvers::WeightedSumOracle {
 public:
  explicit Liar(std::vector<Vec> pts) : good_(pts), pts_(std::move(pts)) {}
  std::size_t objectives() const override { return 3; }
  std::int64_t outcome_bound() const override { return good_.outcome_bound(); }
  OutcomePoint solve(const Weight& w, RunStats& stats) const override {
    auto y = good_.solve(w, stats);
    if (++calls_ > 1) {
      Vec worst = pts_.front();
      for (const auto& p : pts_)
        if (w.exact_value(p) > w.exact_value(worst)) worst = p;
      y.y = worst;
    }
    return y;
  }

 private:
  ListOracle good_;
  std::vector<Vec> pts_;
  mutable int calls_ = 0;
};

std::vector<Vec> truth(const Instance& inst) { return sorted(oracle::oracle_ysn1(oracle::enumerate_outcomes(inst))); }

// Classic bi-objective dichotomy between the two lexicographic optima.
std::vector<Vec> classic_2d(const solvers::WeightedSumOracle& o) {
  RunStats st;
  auto solve = [&](std::vector<BigInt> w) { return o.solve(Weight::exact(std::move(w)), st).y; };
  const auto B = o.outcome_bound();
  const Vec a = solve({BigInt(2 * B + 1), 1});
  const Vec b = solve({1, BigInt(2 * B + 1)});
  std::set<Vec> found{a, b};
  std::vector<std::pair<Vec, Vec>> stack{{a, b}};
  while (!stack.empty()) {
    auto [l, r] = stack.back();
    stack.pop_back();
    if (l == r) continue;
    const std::int64_t w1 = l[1] - r[1], w2 = r[0] - l[0];
    const Vec y = solve({w1, w2});
    if (w1 * y[0] + w2 * y[1] < w1 * l[0] + w2 * l[1]) {
      found.insert(y);
      stack.push_back({l, y});
      stack.push_back({y, r});
    }
  }
  return {found.begin(), found.end()};
}

Problem drop_third(Problem pr) {
  pr.p = 2;
  pr.objectives.resize(2);
  return pr;
}

}  // namespace

TEST_CASE("Example 1: both algorithms return exactly the four supported extreme points") {
  const Instance inst = canonicalize(testing_support::example1());
  const auto oracle = solvers::make_oracle(inst);
  for (auto arith : {Arithmetic::Exact, Arithmetic::Float}) {
    EngineOptions opt;
    opt.arithmetic = arith;
    const auto start = std::chrono::steady_clock::now();
    const auto d = dummy_dichotomy(*oracle, opt);
    const auto b = bd_dichotomy(*oracle, opt);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(sorted(d.points) == testing_support::example1_ysn1());
    CHECK(sorted(b.points) == testing_support::example1_ysn1());
    CHECK(elapsed < 0.1);
    if (arith == Arithmetic::Exact) {
      CHECK(d.stats.float_calls == 0);
      CHECK(b.stats.float_calls == 0);
      CHECK(b.stats.init_solver_calls > 0);
      CHECK(b.stats.init_solver_calls <= b.stats.solver_calls);
    }
  }
}

TEST_CASE("dummy bounds") {
  CHECK(safe_dummy_bound(3, 24) == 1 + 3 * 6 * 24 * 24 * 24);
  CHECK(safe_dummy_bound(2, 10) == 401);
  const Instance inst = canonicalize(testing_support::example1());
  CHECK(inst.outcome_bound() == 24);
  const auto oracle = solvers::make_oracle(inst);
  const auto cfg = make_dummies(*oracle, OutcomePoint{{13, 16, 11}, std::nullopt});
  CHECK(cfg.m > 97);
  CHECK(cfg.m > 40);
  REQUIRE(cfg.dummy_points.size() == 3);
  for (std::size_t q = 0; q < 3; ++q)
    for (std::size_t k = 0; k < 3; ++k) CHECK(cfg.dummy_points[q][k] == (q == k ? cfg.m : 0));
}

TEST_CASE("dummy M of 1+(p+1)B loses a supported point; the safe bound does not") {
  // y0 = (10,1) minimizes the all-ones sum; with M = 31 the point (9,10)
  // falls inside conv{(10,1),(31,0),(0,31)} although it is extreme.
  const ListOracle o({{9, 10}, {10, 1}});
  EngineOptions opt;
  opt.dummy_m = BigInt(1 + 3 * 10);
  CHECK(sorted(dummy_dichotomy(o, opt).points) == std::vector<Vec>{{10, 1}});
  CHECK(sorted(dummy_dichotomy(o).points) == std::vector<Vec>{{9, 10}, {10, 1}});
  CHECK(sorted(bd_dichotomy(o).points) == std::vector<Vec>{{9, 10}, {10, 1}});
}

TEST_CASE("final_filter") {
  std::vector<OutcomePoint> pts;
  for (Vec y : testing_support::example1_ysn1()) pts.push_back({y, std::nullopt});
  pts.push_back({{16, 20, 16}, std::nullopt});
  CHECK(sorted(final_filter(pts)) == testing_support::example1_ysn1());

  const std::vector<OutcomePoint> line{{{2, 10}, {}}, {{6, 6}, {}}, {{10, 2}, {}}};
  CHECK(sorted(final_filter(line)) == std::vector<Vec>{{2, 10}, {10, 2}});
  CHECK_THROWS_AS(final_filter({}), std::invalid_argument);
  CHECK_THROWS_AS(final_filter({{{0, 3}, {}}}), std::invalid_argument);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const std::size_t p = 2 + t % 3;
    std::vector<OutcomePoint> s;
    for (auto& y : testing_support::random_points(rng, p, 5 + t % 20, 1, 30)) s.push_back({y, std::nullopt});
    const auto once = final_filter(s);
    CHECK(sorted(final_filter(once)) == sorted(once));
    CHECK(sorted(once) == sorted(oracle::oracle_ysn1(s)));
  }
}

TEST_CASE("oracle equivalence on random instances, exact mode") {
  struct Family {
    ProblemKind kind;
    int p, n;
  };
  const auto AP = ProblemKind::Assignment, KP = ProblemKind::Knapsack;
  const std::vector<Family> families{{AP, 2, 6}, {AP, 3, 5}, {AP, 3, 6}, {AP, 4, 5}, {KP, 2, 12}, {KP, 3, 10}, {KP, 4, 10}};
  for (std::size_t s = 0; s < families.size(); ++s) {
    for (int i = 0; i < 5; ++i) {
      const auto& sp = families[s];
      const Instance inst = canonicalize(generator::generate(sp.kind, sp.p, sp.n, 7000 + 100 * s + i));
      const auto oracle = solvers::make_oracle(inst);
      std::size_t violations = 0;
      EngineOptions opt;
      opt.observer = [&](const SolveEvent& e) { violations += !e.weight.strictly_positive(); };
      const auto expected = truth(inst);
      const auto d = dummy_dichotomy(*oracle, opt);
      const auto b = bd_dichotomy(*oracle, opt);
      CHECK(sorted(d.points) == expected);
      CHECK(sorted(b.points) == expected);
      CHECK(violations == 0);
      CHECK(d.stats.positivity_violations == 0);
      if (sp.kind == AP) CHECK(d.stats.float_calls + b.stats.float_calls == 0);
    }
  }
}

TEST_CASE("float mode on small instances") {
  for (int i = 0; i < 10; ++i) {
    const Instance inst = canonicalize(i % 2 ? generator::generate_knapsack(3, 10, 300 + i)
                                             : generator::generate_assignment(3, 5, 300 + i));
    const auto oracle = solvers::make_oracle(inst);
    EngineOptions opt;
    opt.arithmetic = Arithmetic::Float;
    const auto expected = truth(inst);
    const auto d = dummy_dichotomy(*oracle, opt);
    const auto b = bd_dichotomy(*oracle, opt);
    CHECK(sorted(d.points) == expected);
    CHECK(sorted(b.points) == expected);
    CHECK(d.stats.float_calls == d.stats.solver_calls);
  }
}

TEST_CASE("dummy_dichotomy inserts only nondominated points and never shrinks the hull") {
  for (int i = 0; i < 12; ++i) {
    const Instance inst = canonicalize(i % 2 ? generator::generate_knapsack(3, 11, 40 + i)
                                             : generator::generate_assignment(3 + i % 3 / 2, 5, 40 + i));
    const auto inner = solvers::make_oracle(inst);
    const Recording rec(*inner);
    std::vector<bool> confirmed;
    EngineOptions opt;
    opt.observer = [&](const SolveEvent& e) { confirmed.push_back(e.confirmed); };
    const auto res = dummy_dichotomy(rec, opt);

    const auto nd = sorted(oracle::pareto_filter(oracle::enumerate_outcomes(inst)));
    REQUIRE(rec.returned.size() == confirmed.size() + 1);
    const std::size_t p = std::size_t(inst.p());
    geometry::ExactHull hull(p);
    hull.insert(geometry::to_exact_point(rec.returned[0]));
    const auto cfg = make_dummies(rec, OutcomePoint{rec.returned[0], std::nullopt});
    for (const auto& d : cfg.dummy_points) hull.insert(d);
    std::size_t vertices = hull.vertices().size();
    for (std::size_t j = 0; j < confirmed.size(); ++j) {
      if (confirmed[j]) continue;
      const auto& y = rec.returned[j + 1];
      CHECK(std::binary_search(nd.begin(), nd.end(), y));
      CHECK(hull.insert(geometry::to_exact_point(y)).outcome == geometry::InsertOutcome::NewVertex);
      CHECK(hull.vertices().size() > vertices);
      vertices = hull.vertices().size();
    }
    CHECK(res.stats.solver_calls == rec.returned.size());
  }
}

TEST_CASE("confirmed weights are unique per run and re-solve to the certified value") {
  for (int i = 0; i < 8; ++i) {
    const Instance inst = canonicalize(generator::generate_assignment(3 + i % 2, 6, 90 + i));
    const auto oracle = solvers::make_oracle(inst);
    for (int alg = 0; alg < 2; ++alg) {
      std::map<std::vector<int>, std::set<std::string>> seen;
      std::size_t duplicates = 0;
      EngineOptions opt;
      opt.observer = [&](const SolveEvent& e) {
        if (e.confirmed && !seen[e.subset].insert(e.weight.to_string()).second) ++duplicates;
      };
      const auto res = alg ? bd_dichotomy(*oracle, opt) : dummy_dichotomy(*oracle, opt);
      CHECK(duplicates == 0);
      CHECK_FALSE(res.facet_certificates.empty());
      for (const auto& c : res.facet_certificates) {
        RunStats st;
        CHECK(c.weight.strictly_positive());
        CHECK(c.weight.exact_value(oracle->solve(c.weight, st).y) == c.value);
      }
    }
  }
}

TEST_CASE("bi-objective runs equal the classic dichotomic scheme") {
  const Instance ex = canonicalize(drop_third(testing_support::example1()));
  const auto o = solvers::make_oracle(ex);
  CHECK(sorted(dummy_dichotomy(*o).points) == std::vector<Vec>{{11, 11}, {15, 9}});
  const auto b = bd_dichotomy(*o);
  CHECK(sorted(b.points) == std::vector<Vec>{{11, 11}, {15, 9}});
  CHECK(b.stats.init_solver_calls == 2);

  for (int i = 0; i < 10; ++i) {
    const Instance inst = canonicalize(i % 2 ? generator::generate_knapsack(2, 14, i) : generator::generate_assignment(2, 7, i));
    const auto oracle = solvers::make_oracle(inst);
    const auto expected = classic_2d(*oracle);
    CHECK(sorted(dummy_dichotomy(*oracle).points) == expected);
    CHECK(sorted(bd_dichotomy(*oracle).points) == expected);
  }
}

TEST_CASE("single-point outcome set") {
  const ListOracle o({{5, 5, 5}});
  const auto d = dummy_dichotomy(o);
  CHECK(sorted(d.points) == std::vector<Vec>{{5, 5, 5}});
  CHECK(d.stats.solver_calls <= 4);
  const auto b = bd_dichotomy(o);
  CHECK(sorted(b.points) == std::vector<Vec>{{5, 5, 5}});
  CHECK_FALSE(b.stats.warnings.empty());

  RunStats st;
  CHECK_THROWS_AS(initial_points(o, true, st), NotFullDimensional);
  CHECK_THROWS_AS(inflate_balloon(o, {{{5, 5, 5}, {}}, {{5, 5, 5}, {}}}), NotFullDimensional);
}

TEST_CASE("inflate_balloon finds every vertex of conv Y") {
  const Instance inst = canonicalize(testing_support::example1());
  const auto oracle = solvers::make_oracle(inst);
  std::vector<OutcomePoint> init;
  for (Vec y : {Vec{11, 11, 14}, Vec{15, 9, 17}, Vec{19, 14, 10}, Vec{16, 20, 16}}) init.push_back({y, std::nullopt});
  // Vertices of the hull of all 24 outcomes, frozen from an independent hull code.
  const std::vector<Vec> expected{{11, 11, 14}, {13, 16, 11}, {13, 19, 15}, {15, 9, 17},
                                  {16, 16, 20}, {16, 17, 12}, {16, 18, 13}, {16, 20, 16},
                                  {18, 19, 15}, {19, 13, 13}, {19, 14, 10}, {20, 17, 13}};
  CHECK(sorted(inflate_balloon(*oracle, init).vertices) == expected);

  RunStats st;
  const auto lex = initial_points(*oracle, true, st);
  CHECK(lex.size() >= 4);
  CHECK(sorted(inflate_balloon(*oracle, lex).vertices) == expected);
  CHECK(sorted(final_filter(inflate_balloon(*oracle, lex).vertices)) == testing_support::example1_ysn1());

  for (int i = 0; i < 8; ++i) {
    const Instance two = canonicalize(generator::generate_assignment(2, 5, 60 + i));
    const auto o2 = solvers::make_oracle(two);
    std::vector<Vec> all = sorted(oracle::enumerate_outcomes(two));
    RunStats s2;
    const auto got = sorted(inflate_balloon(*o2, initial_points(*o2, true, s2)).vertices);
    std::set<Vec> verts = testing_support::naive_vertices(all);
    CHECK(got == std::vector<Vec>(verts.begin(), verts.end()));
  }
}

TEST_CASE("a non-optimal oracle answer is reported with its weight") {
  std::vector<Vec> pts{{1, 9, 9}, {9, 1, 9}, {9, 9, 1}, {4, 4, 4}, {20, 20, 20}};
  const Liar liar(pts);
  CHECK_THROWS_WITH_AS(dummy_dichotomy(liar), doctest::Contains("non-optimal"), EngineError);
}

TEST_CASE("iteration guard") {
  const Instance inst = canonicalize(generator::generate_assignment(3, 6, 5));
  const auto oracle = solvers::make_oracle(inst);
  EngineOptions opt;
  opt.max_iterations = 3;
  CHECK_THROWS_AS(dummy_dichotomy(*oracle, opt), EngineError);
}
