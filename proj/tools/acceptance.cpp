// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "dichotomy/engine.hpp"
#include "dichotomy/generator.hpp"
#include "dichotomy/geometry.hpp"
#include "dichotomy/oracle.hpp"
#include "dichotomy/solvers.hpp"
#include "support.hpp"

using namespace dichotomy;
using testing_support::sorted;
using testing_support::Vec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Weight exact_weight(std::initializer_list<long> xs) {
  std::vector<BigInt> v;
  for (long x : xs) v.emplace_back(x);
  return Weight::exact(v);
}

void example1_regression() {
  const Instance inst = canonicalize(testing_support::example1());
  const auto oracle = solvers::make_oracle(inst);
  bool ok = true;
  double worst = 0;
  for (int alg = 0; alg < 2; ++alg) {
    const auto t = Clock::now();
    const auto res = alg ? engine::bd_dichotomy(*oracle) : engine::dummy_dichotomy(*oracle);
    const double s = seconds_since(t);
    worst = std::max(worst, s);
    const auto pts = sorted(res.points);
    ok = ok && pts == testing_support::example1_ysn1() && s < 0.1;
    ok = ok && std::find(pts.begin(), pts.end(), Vec{16, 20, 16}) == pts.end();
  }
  report(1, "Example 1 regression (dummy and bd, exact)", ok, fmt("4-point set matched; slowest run %.4f s", worst));
}

void naive_dichotomy_failure() {
  const Instance inst = canonicalize(testing_support::example1());
  RunStats st;
  const auto yd = solvers::weighted_sum_solve(inst, exact_weight({1, -40, -28}), st).y;
  const auto yt = solvers::weighted_sum_solve(inst, exact_weight({-1, 40, 28}), st).y;
  const std::vector<Vec> plane{{11, 11, 14}, {15, 9, 17}, {19, 14, 10}};
  const bool ok = yd == Vec{16, 20, 16} && std::find(plane.begin(), plane.end(), yt) != plane.end();
  report(2, "naive dichotomy failure reproduction", ok,
         fmt("(1,-40,-28) -> (%g,%g,%g)", double(yd[0]), double(yd[1]), double(yd[2])) +
             fmt(", (-1,40,28) -> (%g,%g,%g)", double(yt[0]), double(yt[1]), double(yt[2])));
}

struct SuiteResult {
  int instances = 0, mismatches = 0, errors = 0;
  std::uint64_t main_weights = 0, nonpositive = 0, ap_float_calls = 0, ap_runs = 0;
  double seconds = 0;
};

SuiteResult equivalence_suite() {
  struct Family {
    ProblemKind kind;
    int p, lo, hi, per_size;
  };
  const auto AP = ProblemKind::Assignment, KP = ProblemKind::Knapsack;
  const std::vector<Family> families{{AP, 3, 4, 7, 15}, {AP, 4, 4, 6, 15}, {KP, 3, 8, 16, 6}, {KP, 4, 8, 14, 7}};
  SuiteResult r;
  const auto start = Clock::now();
  for (std::size_t f = 0; f < families.size(); ++f) {
    const auto& fam = families[f];
    for (int n = fam.lo; n <= fam.hi; ++n) {
      for (int i = 0; i < fam.per_size; ++i) {
        ++r.instances;
        const std::uint64_t seed = 900000 + 100000 * f + 1000 * std::uint64_t(n) + std::uint64_t(i);
        try {
          const Instance inst = canonicalize(generator::generate(fam.kind, fam.p, n, seed));
          const auto oracle = solvers::make_oracle(inst);
          engine::EngineOptions opt;
          opt.observer = [&](const engine::SolveEvent& e) {
            if (e.phase != engine::Phase::Main) return;
            ++r.main_weights;
            r.nonpositive += !e.weight.strictly_positive();
          };
          const auto truth = sorted(oracle::oracle_ysn1(oracle::enumerate_outcomes(inst)));
          const auto d = engine::dummy_dichotomy(*oracle, opt);
          const auto b = engine::bd_dichotomy(*oracle, opt);
          r.nonpositive += d.stats.positivity_violations;
          if (sorted(d.points) != truth || sorted(b.points) != truth) ++r.mismatches;
          if (fam.kind == AP) {
            r.ap_runs += 2;
            r.ap_float_calls += d.stats.float_calls + b.stats.float_calls;
          }
        } catch (const std::exception& e) {
          ++r.errors;
          std::fprintf(stderr, "instance seed %llu: %s\n", (unsigned long long)seed, e.what());
        }
      }
    }
  }
  r.seconds = seconds_since(start);
  return r;
}

void hull_correctness() {
  std::mt19937_64 rng(31337);
  int sets = 0, mismatches = 0, euler_checked = 0, euler_failed = 0;
  while (sets < 200) {
    const std::size_t p = 2 + sets % 3;
    const std::size_t count = p + 1 + rng() % (25 - p);
    auto pts = testing_support::random_points(rng, p, count, 0, 100);
    if (!testing_support::full_dimensional(pts)) continue;
    ++sets;
    geometry::ExactHull h(p);
    for (const auto& y : pts) h.insert(geometry::to_exact_point(y));
    std::set<Vec> got;
    for (auto v : h.vertices()) got.insert(pts[v]);
    mismatches += got != testing_support::naive_vertices(pts);
    if (p == 3) {
      ++euler_checked;
      const auto f = std::int64_t(h.alive_facets().size());
      euler_failed += f % 2 != 0 || std::int64_t(h.vertices().size()) - 3 * f / 2 + f != 2;
    }
  }
  report(6, "hull correctness against naive vertex oracle", mismatches == 0 && euler_failed == 0,
         fmt("%g sets, %g vertex mismatches, Euler checked on %g (failed %g)", sets, mismatches, euler_checked,
             euler_failed));
}

void desk_scale() {
  bool ok = true;
  std::string detail;
  for (std::uint64_t seed : {1, 2, 3}) {
    const Instance inst = canonicalize(generator::generate_assignment(3, 30, seed));
    const auto oracle = solvers::make_oracle(inst);
    for (int alg = 0; alg < 2; ++alg) {
      for (auto arith : {Arithmetic::Exact, Arithmetic::Float}) {
        engine::EngineOptions opt;
        opt.arithmetic = arith;
        const auto t = Clock::now();
        const auto res = alg ? engine::bd_dichotomy(*oracle, opt) : engine::dummy_dichotomy(*oracle, opt);
        const double s = seconds_since(t);
        const double y = double(res.points.size());
        const double calls = double(res.stats.solver_calls);
        const double limit = arith == Arithmetic::Exact ? 60.0 : 20.0;
        const bool this_ok = s < limit && calls >= 4 * y / 3 && calls <= 12 * y;
        ok = ok && this_ok;
        if (seed == 1 || !this_ok)
          detail += std::string(detail.empty() ? "" : "; ") + (alg ? "bd" : "dummy") +
                    (arith == Arithmetic::Exact ? "/exact" : "/float") +
                    fmt(" |Y|=%g calls=%g %.2fs", y, calls, s);
      }
    }
  }
  report(7, "3AP 30x30 desk-scale performance", ok, detail + " (seeds 1-3)");
}

void reference_scale() {
  double ysn1 = 0, ratio_dummy = 0, ratio_bd = 0;
  const int count = 10;
  for (int i = 0; i < count; ++i) {
    const Instance inst = canonicalize(generator::generate_assignment(3, 10, 1 + 1000 * 10 + i));
    const auto oracle = solvers::make_oracle(inst);
    const auto d = engine::dummy_dichotomy(*oracle);
    const auto b = engine::bd_dichotomy(*oracle);
    ysn1 += double(b.points.size()) / count;
    ratio_dummy += double(d.stats.solver_calls) / double(d.points.size()) / count;
    ratio_bd += double(b.stats.solver_calls) / double(b.points.size()) / count;
  }
  const bool ok = ysn1 >= 15 && ysn1 <= 75 && ratio_dummy >= 2 && ratio_dummy <= 5 && ratio_bd >= 2 && ratio_bd <= 5;
  report(8, "3AP 10x10 magnitudes", ok,
         fmt("mean |Y_SN1| = %.1f, mean calls/|Y_SN1| dummy %.2f, bd %.2f", ysn1, ratio_dummy, ratio_bd));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  example1_regression();
  naive_dichotomy_failure();

  const auto suite = equivalence_suite();
  report(3, "oracle equivalence suite (exact)",
         suite.instances >= 200 && suite.mismatches == 0 && suite.errors == 0 && suite.seconds < 300,
         fmt("%g instances, %g mismatches, %g errors, %.1f s", suite.instances, suite.mismatches, suite.errors,
             suite.seconds));
  report(4, "strictly positive weights in main loops", suite.nonpositive == 0 && suite.main_weights > 0,
         fmt("%g main-loop weights, %g not strictly positive", double(suite.main_weights), double(suite.nonpositive)));
  report(5, "exact assignment runs use no float solves", suite.ap_float_calls == 0 && suite.ap_runs > 0,
         fmt("%g exact AP runs, float_calls total %g", double(suite.ap_runs), double(suite.ap_float_calls)));

  hull_correctness();
  desk_scale();
  reference_scale();

  std::printf("%s: %d of 8 criteria failed (%.1f s)\n", failures ? "FAIL" : "PASS", failures, seconds_since(start));
  return failures ? 1 : 0;
}
