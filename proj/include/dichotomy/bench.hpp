// Benchmark series over generated instances: one row per size, four
// implementation variants per row (dummy/bd × exact/float).
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dichotomy/problem.hpp"

namespace dichotomy::bench {

enum class Variant { DummyExact, DummyFloat, BdExact, BdFloat };
inline constexpr std::array<Variant, 4> kVariants{Variant::DummyExact, Variant::DummyFloat, Variant::BdExact,
                                                  Variant::BdFloat};

/// v1_ex, v1_fl, v2_ex, v2_fl
std::string label(Variant v);

struct BenchSpec {
  ProblemKind kind = ProblemKind::Assignment;
  int p = 3;
  std::vector<int> sizes;
  int instances = 10;
  std::uint64_t seed_base = 1;
  /// Worker threads; instances run concurrently, each run stays sequential.
  unsigned parallel = 1;
};

/// Seed of the i-th instance of size n.
std::uint64_t instance_seed(std::uint64_t seed_base, int n, int i);

/// Means over the instances of one row for one variant.
struct VariantCell {
  double ysn1 = 0;
  double solver_calls = 0;
  double float_call_percent = 0;
  double init_solver_calls = 0;
  double time_s = 0;
};

struct BenchRow {
  int size = 0;
  int instances = 0;
  /// Absent when any instance failed for that variant (printed as ×).
  std::array<std::optional<VariantCell>, 4> cells;
  std::vector<std::string> errors;

  /// Mean |Y_SN1| of the first exact variant that completed.
  std::optional<double> ysn1() const;
};

std::vector<BenchRow> run_bench(const BenchSpec& series);

std::string format_table(const BenchSpec& series, const std::vector<BenchRow>& rows);
std::string format_json(const BenchSpec& series, const std::vector<BenchRow>& rows);

}  // namespace dichotomy::bench
