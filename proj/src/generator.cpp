#include "dichotomy/generator.hpp"

#include <numeric>
#include <stdexcept>

namespace dichotomy::generator {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = std::uint64_t(hi - lo) + 1;
  if (span == 0) return std::int64_t(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + std::int64_t(x % span);
}

namespace {

void check(int p, int n) {
  if (p < 2 || p > 5) throw std::invalid_argument("p must be in 2..5");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
}

}  // namespace

Problem generate_assignment(int p, int n, std::uint64_t seed) {
  check(p, n);
  SplitMix64 rng(seed);
  Problem pr;
  pr.kind = ProblemKind::Assignment;
  pr.p = p;
  pr.n = n;
  for (int k = 0; k < p; ++k) {
    std::vector<std::int64_t> c(std::size_t(n) * n);
    for (auto& v : c) v = rng.uniform(0, 20);
    pr.objectives.push_back(std::move(c));
  }
  return pr;
}

Problem generate_knapsack(int p, int n, std::uint64_t seed) {
  check(p, n);
  SplitMix64 rng(seed);
  Problem pr;
  pr.kind = ProblemKind::Knapsack;
  pr.p = p;
  pr.n = n;
  pr.weights.resize(n);
  for (auto& w : pr.weights) w = rng.uniform(1, 100);
  for (int k = 0; k < p; ++k) {
    std::vector<std::int64_t> c(n);
    for (auto& v : c) v = rng.uniform(1, 100);
    pr.objectives.push_back(std::move(c));
  }
  const std::int64_t total = std::accumulate(pr.weights.begin(), pr.weights.end(), std::int64_t{0});
  pr.capacity = (total + 1) / 2;
  return pr;
}

Problem generate(ProblemKind kind, int p, int n, std::uint64_t seed) {
  return kind == ProblemKind::Assignment ? generate_assignment(p, n, seed) : generate_knapsack(p, n, seed);
}

}  // namespace dichotomy::generator
