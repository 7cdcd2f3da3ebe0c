#include "dichotomy/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dichotomy {

Weight Weight::exact(std::vector<BigInt> lambda) {
  return Weight(numerics::gcd_reduce(std::move(lambda)));
}

Weight Weight::floating(std::vector<double> lambda) {
  if (std::all_of(lambda.begin(), lambda.end(), [](double v) { return v == 0.0; }))
    throw std::domain_error("Weight: zero vector");
  for (double v : lambda) numerics::FloatScalar checked(v);
  return Weight(std::move(lambda));
}

std::size_t Weight::size() const {
  return is_exact() ? exact_values().size() : float_values().size();
}

bool Weight::strictly_positive(double eps) const {
  if (is_exact()) {
    const auto& v = exact_values();
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x > 0; });
  }
  const auto& v = float_values();
  return std::all_of(v.begin(), v.end(), [eps](double x) { return x > eps; });
}

BigInt Weight::exact_value(const std::vector<std::int64_t>& y) const {
  return numerics::dot(exact_values(), y);
}

double Weight::float_value(const std::vector<std::int64_t>& y) const {
  double s = 0.0;
  if (is_exact()) {
    const auto& v = exact_values();
    for (std::size_t k = 0; k < y.size(); ++k) s += numerics::to_double(v[k]) * double(y[k]);
  } else {
    const auto& v = float_values();
    for (std::size_t k = 0; k < y.size(); ++k) s += v[k] * double(y[k]);
  }
  return s;
}

std::string Weight::to_string() const {
  if (is_exact()) return numerics::to_string(exact_values());
  std::ostringstream os;
  os.precision(17);
  os << '(';
  const auto& v = float_values();
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

void RunStats::merge(const RunStats& o) {
  solver_calls += o.solver_calls;
  float_calls += o.float_calls;
  wide_calls += o.wide_calls;
  init_solver_calls += o.init_solver_calls;
  extreme_points_found += o.extreme_points_found;
  positivity_violations += o.positivity_violations;
  reduced_reliability += o.reduced_reliability;
  wall_time_s += o.wall_time_s;
  warnings.insert(warnings.end(), o.warnings.begin(), o.warnings.end());
}

}  // namespace dichotomy
