// moip: generate, solve, check and benchmark multi-objective AP/KP instances.
//
// Exit codes: 0 success, 1 check FAIL, 2 usage or parse error, 3 solver failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dichotomy/bench.hpp"
#include "dichotomy/engine.hpp"
#include "dichotomy/generator.hpp"
#include "dichotomy/io.hpp"
#include "dichotomy/oracle.hpp"
#include "dichotomy/solvers.hpp"

using namespace dichotomy;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kError = 3;

ProblemKind parse_kind(const std::string& s) {
  return s == "ap" ? ProblemKind::Assignment : ProblemKind::Knapsack;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<std::vector<std::int64_t>> sorted_y(const std::vector<OutcomePoint>& pts) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& y : pts) out.push_back(y.y);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nondominated extreme points of multi-objective assignment and knapsack problems"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write a random instance");
  std::string gen_kind, gen_out;
  int gen_p = 3, gen_n = 10;
  std::uint64_t gen_seed = 1;
  gen->add_option("kind", gen_kind, "ap or kp")->required()->check(CLI::IsMember({"ap", "kp"}));
  gen->add_option("p", gen_p, "number of objectives")->required()->check(CLI::Range(2, 5));
  gen->add_option("n", gen_n, "size (AP: n x n, KP: items)")->required()->check(CLI::Range(2, 100000));
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  auto* sol = app.add_subcommand("solve", "compute the nondominated extreme points");
  std::string sol_file, sol_alg = "bd", sol_arith = "exact", sol_out;
  double sol_tol = FloatTolerances{}.equality;
  bool sol_lex = false;
  sol->add_option("instance", sol_file, "instance file")->required();
  sol->add_option("--algorithm", sol_alg, "dummy, bd or balloon")->check(CLI::IsMember({"dummy", "bd", "balloon"}));
  sol->add_option("--arithmetic", sol_arith, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  sol->add_option("--out", sol_out, "result file (default stdout)");
  sol->add_option("--tolerance", sol_tol, "float-mode relative equality tolerance")->check(CLI::PositiveNumber);
  sol->add_flag("--init-from-lex", sol_lex, "balloon: start from lexicographic optima");

  // check
  auto* chk = app.add_subcommand("check", "compare both algorithms with the brute-force oracle");
  std::string chk_file;
  chk->add_option("instance", chk_file, "instance file")->required();

  // bench
  auto* ben = app.add_subcommand("bench", "benchmark table over generated instances");
  std::string ben_kind = "ap", ben_json;
  int ben_p = 3, ben_instances = 10;
  std::vector<int> ben_sizes;
  std::uint64_t ben_seed = 1;
  unsigned ben_parallel = 1;
  ben->add_option("--kind", ben_kind, "ap or kp")->check(CLI::IsMember({"ap", "kp"}));
  ben->add_option("--p", ben_p, "number of objectives")->check(CLI::Range(2, 5));
  ben->add_option("--sizes", ben_sizes, "comma-separated sizes")->delimiter(',')->check(CLI::Range(2, 100000));
  ben->add_option("--instances", ben_instances, "instances per size")->check(CLI::Range(1, 100000));
  ben->add_option("--seed", ben_seed, "seed base; instance i of size n uses seed+1000n+i");
  ben->add_option("--parallel", ben_parallel, "worker threads")->check(CLI::Range(1u, 256u));
  ben->add_option("--json", ben_json, "also write machine-readable results here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const auto pr = generator::generate(parse_kind(gen_kind), gen_p, gen_n, gen_seed);
      write_text(gen_out, io::format_instance(pr));
      return kOk;
    }

    if (*sol) {
      const Instance inst = canonicalize(io::read_instance(sol_file));
      const auto oracle = solvers::make_oracle(inst);
      engine::EngineOptions opt;
      opt.arithmetic = sol_arith == "exact" ? Arithmetic::Exact : Arithmetic::Float;
      opt.tolerances.equality = sol_tol;

      std::vector<OutcomePoint> points;
      RunStats stats;
      std::size_t ysn1 = 0;
      if (sol_alg == "balloon") {
        RunStats init_stats;
        const auto init = engine::initial_points(*oracle, sol_lex, init_stats, opt);
        auto res = engine::inflate_balloon(*oracle, init, opt);
        stats = res.stats;
        stats.init_solver_calls = init_stats.solver_calls;
        stats.solver_calls += init_stats.solver_calls;
        stats.float_calls += init_stats.float_calls;
        ysn1 = engine::final_filter(res.vertices).size();
        points = std::move(res.vertices);
      } else {
        auto res = sol_alg == "dummy" ? engine::dummy_dichotomy(*oracle, opt) : engine::bd_dichotomy(*oracle, opt);
        stats = res.stats;
        points = std::move(res.points);
        ysn1 = points.size();
      }
      write_text(sol_out, io::format_points(io::to_original_sorted(inst, points)));
      std::cout << io::format_report(stats, ysn1);
      for (const auto& w : stats.warnings) std::cerr << "warning: " << w << '\n';
      return kOk;
    }

    if (*chk) {
      const Instance inst = canonicalize(io::read_instance(chk_file));
      const auto outcomes = oracle::enumerate_outcomes(inst);
      const auto truth = sorted_y(oracle::oracle_ysn1(outcomes));
      const auto oracle = solvers::make_oracle(inst);
      const auto dummy = sorted_y(engine::dummy_dichotomy(*oracle).points);
      const auto bd = sorted_y(engine::bd_dichotomy(*oracle).points);
      const bool pass = dummy == truth && bd == truth;
      std::cout << (pass ? "PASS" : "FAIL") << " oracle=" << truth.size() << " dummy=" << dummy.size()
                << " bd=" << bd.size() << '\n';
      return pass ? kOk : kFail;
    }

    if (*ben) {
      bench::BenchSpec series;
      series.kind = parse_kind(ben_kind);
      series.p = ben_p;
      series.sizes = ben_sizes;
      series.instances = ben_instances;
      series.seed_base = ben_seed;
      series.parallel = ben_parallel;
      const auto rows = bench::run_bench(series);
      std::cout << bench::format_table(series, rows);
      for (const auto& row : rows)
        for (const auto& e : row.errors) std::cerr << "size " << row.size << ": " << e << '\n';
      if (!ben_json.empty()) write_text(ben_json, bench::format_json(series, rows));
      return kOk;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const oracle::OracleRefused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}
