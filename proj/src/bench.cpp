#include "dichotomy/bench.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>

#include "dichotomy/engine.hpp"
#include "dichotomy/generator.hpp"
#include "dichotomy/solvers.hpp"
#include "json.hpp"

namespace dichotomy::bench {

std::string label(Variant v) {
  switch (v) {
    case Variant::DummyExact: return "v1_ex";
    case Variant::DummyFloat: return "v1_fl";
    case Variant::BdExact: return "v2_ex";
    case Variant::BdFloat: return "v2_fl";
  }
  return "?";
}

std::uint64_t instance_seed(std::uint64_t seed_base, int n, int i) {
  return seed_base + 1000 * std::uint64_t(n) + std::uint64_t(i);
}

std::optional<double> BenchRow::ysn1() const {
  for (std::size_t v : {0u, 2u})
    if (cells[v]) return cells[v]->ysn1;
  for (const auto& c : cells)
    if (c) return c->ysn1;
  return std::nullopt;
}

namespace {

struct Sample {
  bool ok = false;
  VariantCell values;
  std::string error;
};

Sample run_one(const Instance& inst, Variant v) {
  Sample s;
  try {
    const auto oracle = solvers::make_oracle(inst);
    engine::EngineOptions opt;
    opt.arithmetic = v == Variant::DummyExact || v == Variant::BdExact ? Arithmetic::Exact : Arithmetic::Float;
    const auto res = v == Variant::DummyExact || v == Variant::DummyFloat ? engine::dummy_dichotomy(*oracle, opt)
                                                                          : engine::bd_dichotomy(*oracle, opt);
    const auto& st = res.stats;
    s.values.ysn1 = double(res.points.size());
    s.values.solver_calls = double(st.solver_calls);
    s.values.float_call_percent = st.solver_calls ? 100.0 * double(st.float_calls) / double(st.solver_calls) : 0.0;
    s.values.init_solver_calls = double(st.init_solver_calls);
    s.values.time_s = st.wall_time_s;
    s.ok = true;
  } catch (const std::exception& e) {
    s.error = e.what();
  }
  return s;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& series) {
  const int per = series.instances;
  if (per < 1 && !series.sizes.empty()) throw std::invalid_argument("instances per size must be >= 1");
  const std::size_t jobs = series.sizes.size() * std::size_t(std::max(per, 0));
  // samples[job][variant]
  std::vector<std::array<Sample, 4>> samples(jobs);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
      const int n = series.sizes[j / per];
      const int i = int(j % per);
      const Instance inst = canonicalize(generator::generate(series.kind, series.p, n, instance_seed(series.seed_base, n, i)));
      for (std::size_t v = 0; v < 4; ++v) samples[j][v] = run_one(inst, kVariants[v]);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(series.parallel, unsigned(std::max<std::size_t>(jobs, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<BenchRow> rows;
  for (std::size_t s = 0; s < series.sizes.size(); ++s) {
    BenchRow row;
    row.size = series.sizes[s];
    row.instances = per;
    for (std::size_t v = 0; v < 4; ++v) {
      VariantCell mean;
      bool all_ok = true;
      for (int i = 0; i < per; ++i) {
        const Sample& smp = samples[s * per + i][v];
        if (!smp.ok) {
          all_ok = false;
          row.errors.push_back(label(kVariants[v]) + " instance " + std::to_string(i) + ": " + smp.error);
          continue;
        }
        mean.ysn1 += smp.values.ysn1 / per;
        mean.solver_calls += smp.values.solver_calls / per;
        mean.float_call_percent += smp.values.float_call_percent / per;
        mean.init_solver_calls += smp.values.init_solver_calls / per;
        mean.time_s += smp.values.time_s / per;
      }
      if (all_ok) row.cells[v] = mean;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_table(const BenchSpec& series, const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  const char* kind = series.kind == ProblemKind::Assignment ? "AP" : "KP";
  os << series.p << kind << "  (" << series.instances << " instances per size, seed base " << series.seed_base << ")\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %8s | %-22s %-10s | %-22s %-10s | %-30s %-10s | %-30s %-10s\n", "size",
                "|Y_SN1|", "v1_ex calls", "time", "v1_fl calls", "time", "v2_ex calls [init]", "time",
                "v2_fl calls [init]", "time");
  os << line;
  for (const auto& row : rows) {
    const std::string size =
        series.kind == ProblemKind::Assignment ? std::to_string(row.size) + "x" + std::to_string(row.size)
                                             : std::to_string(row.size);
    const auto y = row.ysn1();
    std::snprintf(line, sizeof line, "%-8s %8s", size.c_str(), y ? fixed(*y, 1).c_str() : "×");
    os << line;
    for (std::size_t v = 0; v < 4; ++v) {
      std::string calls = "×", time = "×";
      if (const auto& c = row.cells[v]) {
        calls = fixed(c->solver_calls, 1) + " (" + fixed(c->float_call_percent, 1) + "%)";
        if (v >= 2) calls += " [" + fixed(c->init_solver_calls, 1) + "]";
        time = fixed(c->time_s, 3);
      }
      std::snprintf(line, sizeof line, " | %-*s %-10s", v >= 2 ? 30 : 22, calls.c_str(), time.c_str());
      os << line;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_json(const BenchSpec& series, const std::vector<BenchRow>& rows) {
  nlohmann::json out;
  out["kind"] = series.kind == ProblemKind::Assignment ? "ap" : "kp";
  out["p"] = series.p;
  out["instances"] = series.instances;
  out["seed_base"] = series.seed_base;
  out["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["size"] = row.size;
    r["ysn1"] = row.ysn1() ? nlohmann::json(*row.ysn1()) : nlohmann::json(nullptr);
    for (std::size_t v = 0; v < 4; ++v) {
      const auto& c = row.cells[v];
      if (!c) {
        r[label(kVariants[v])] = nullptr;
        continue;
      }
      r[label(kVariants[v])] = {{"ysn1", c->ysn1},
                                {"solver_calls", c->solver_calls},
                                {"float_call_percent", c->float_call_percent},
                                {"init_solver_calls", c->init_solver_calls},
                                {"time_s", c->time_s}};
    }
    r["errors"] = row.errors;
    out["rows"].push_back(std::move(r));
  }
  return out.dump(2) + "\n";
}

}  // namespace dichotomy::bench
