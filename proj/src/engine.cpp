#include "dichotomy/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "dichotomy/geometry.hpp"

namespace dichotomy::engine {

using geometry::ConvexHull;
using geometry::InsertOutcome;
using geometry::PointId;
using solvers::WeightedSumOracle;

namespace {

std::vector<std::int64_t> project(const std::vector<std::int64_t>& y, const std::vector<int>& subset) {
  std::vector<std::int64_t> out;
  out.reserve(subset.size());
  for (int k : subset) out.push_back(y[k]);
  return out;
}

std::vector<int> all_objectives(std::size_t p) {
  std::vector<int> s(p);
  for (std::size_t k = 0; k < p; ++k) s[k] = int(k);
  return s;
}

template <class Arith>
typename ConvexHull<Arith>::Point to_hull(const std::vector<std::int64_t>& y) {
  if constexpr (Arith::exact) return geometry::to_exact_point(y);
  else return geometry::to_float_point(y);
}

template <class Arith>
typename ConvexHull<Arith>::Point to_hull(const std::vector<BigInt>& v) {
  if constexpr (Arith::exact) {
    return v;
  } else {
    typename ConvexHull<Arith>::Point out;
    for (const auto& x : v) out.push_back(numerics::to_double(x));
    return out;
  }
}

template <class Arith>
Weight ones_weight(std::size_t m) {
  if constexpr (Arith::exact) return Weight::exact(std::vector<BigInt>(m, 1));
  else return Weight::floating(std::vector<double>(m, 1.0));
}

bool lex_less(const OutcomePoint& a, const OutcomePoint& b) { return a.y < b.y; }

void sort_unique(std::vector<OutcomePoint>& pts) {
  std::stable_sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Hull over the projection of outcome points onto `subset`; artificial
// points (dummies, the nadir point) have no outcome attached.
template <class Arith>
class Workspace {
 public:
  Workspace(std::vector<int> subset, FloatTolerances tol)
      : subset_(std::move(subset)), hull_(subset_.size(), tol) {}

  InsertOutcome add(const OutcomePoint& y) {
    origin_.push_back(y);
    return hull_.insert(to_hull<Arith>(project(y.y, subset_))).outcome;
  }

  void add_artificial(const std::vector<BigInt>& coords) {
    origin_.emplace_back(std::nullopt);
    hull_.insert(to_hull<Arith>(coords));
  }

  ConvexHull<Arith>& hull() { return hull_; }
  const std::vector<int>& subset() const { return subset_; }
  const std::optional<OutcomePoint>& origin(PointId id) const { return origin_[id]; }

  std::vector<OutcomePoint> real_vertices() const {
    std::vector<OutcomePoint> out;
    for (PointId v : hull_.vertices())
      if (origin_[v]) out.push_back(*origin_[v]);
    return out;
  }

 private:
  std::vector<int> subset_;
  ConvexHull<Arith> hull_;
  std::vector<std::optional<OutcomePoint>> origin_;
};

// Solves a weight defined on `subset`, composing it into a big-M cascade when
// the subset is proper.
struct SubsetSolver {
  const WeightedSumOracle& oracle;
  std::vector<int> subset;
  std::size_t p;
  std::int64_t bound;
  RunStats& stats;

  OutcomePoint operator()(const Weight& w) const {
    if (subset.size() == p) return oracle.solve(w, stats);
    return oracle.solve(solvers::subproblem_weight(w, subset, p, bound, &stats), stats);
  }
};

enum class Policy { Balloon, Dummy, Boundary };

template <class Arith>
std::string describe_facet(ConvexHull<Arith>& hull, geometry::FacetId f) {
  std::string s = "{";
  for (PointId v : hull.facet(f).vertices) {
    s += s.size() > 1 ? " " : "";
    s += "(";
    const auto& pt = hull.point(v);
    for (std::size_t k = 0; k < pt.size(); ++k) {
      std::ostringstream os;
      os << pt[k];
      s += (k ? "," : "") + os.str();
    }
    s += ")";
  }
  return s + "}";
}

template <class Arith>
void explore(Workspace<Arith>& ws, Policy policy, const SubsetSolver& solve, const EngineOptions& opt,
             Phase phase, RunStats& stats, std::vector<FacetCertificate>* certificates) {
  auto& hull = ws.hull();
  std::set<std::vector<BigInt>> confirmed;
  std::size_t iterations = 0;
  std::size_t float_anomalies = 0;

  while (auto next = hull.next_unexplored()) {
    const geometry::FacetId fid = *next;
    if (++iterations > opt.max_iterations) throw EngineError("dichotomy iteration limit exceeded");
    const auto& facet = hull.facet(fid);

    std::optional<PointId> witness;
    for (PointId v : facet.vertices) {
      if (ws.origin(v)) {
        witness = v;
        break;
      }
    }
    if (!witness) {  // the all-dummy facet
      hull.mark_explored(fid);
      continue;
    }

    bool positive;
    if constexpr (Arith::exact) positive = geometry::is_nondominated_facet(facet);
    else positive = geometry::is_nondominated_facet(facet, opt.tolerances.positivity);
    if (!positive && policy != Policy::Balloon) {
      if (policy == Policy::Dummy) {
        ++stats.positivity_violations;
        if constexpr (Arith::exact) {
          throw EngineError("dominated facet selected: weight " + geometry::facet_weight(facet).to_string() +
                            " facet " + describe_facet(hull, fid));
        }
      }
      hull.mark_explored(fid);
      continue;
    }

    const Weight w = geometry::facet_weight(facet);
    if constexpr (Arith::exact) {
      if (confirmed.count(w.exact_values())) {
        hull.mark_explored(fid);
        continue;
      }
    }

    const auto on_facet = project(ws.origin(*witness)->y, ws.subset());
    const OutcomePoint y = solve(w);
    const auto py = project(y.y, ws.subset());

    bool confirm;
    if constexpr (Arith::exact) {
      const BigInt found = w.exact_value(py);
      const BigInt current = w.exact_value(on_facet);
      if (found > current)
        throw EngineError("weighted-sum oracle returned a non-optimal point for " + w.to_string());
      confirm = found == current;
      if (confirm) {
        confirmed.insert(w.exact_values());
        if (certificates) certificates->push_back({w, current});
      }
    } else {
      const double found = w.float_value(py);
      const double current = w.float_value(on_facet);
      const double tol = opt.tolerances.equality * std::max(1.0, std::abs(current));
      confirm = found >= current - tol;
    }

    if (confirm) {
      hull.mark_explored(fid);
    } else if (ws.add(y) != InsertOutcome::NewVertex) {
      if constexpr (Arith::exact) {
        throw EngineError("point strictly beyond facet " + w.to_string() + " was rejected by the hull");
      }
      ++float_anomalies;
      hull.mark_explored(fid);
    }
    if (opt.observer) opt.observer(SolveEvent{phase, ws.subset(), w, confirm});
  }
  if (float_anomalies)
    stats.warnings.push_back(std::to_string(float_anomalies) +
                             " facet(s) closed after a float-tolerance disagreement between solver and hull");
}

BigInt dummy_m_for(std::size_t m, std::int64_t bound, const std::vector<std::int64_t>& y0) {
  BigInt sum = 0;
  for (auto v : y0) sum += v;
  return std::max(safe_dummy_bound(m, bound), BigInt(sum + 1));
}

template <class Arith>
std::vector<OutcomePoint> run_dummy(const WeightedSumOracle& oracle, const std::vector<int>& subset,
                                    const EngineOptions& opt, Phase phase, RunStats& stats,
                                    std::vector<FacetCertificate>* certificates) {
  const std::size_t m = subset.size();
  const SubsetSolver solve{oracle, subset, oracle.objectives(), oracle.outcome_bound(), stats};
  const OutcomePoint y0 = solve(ones_weight<Arith>(m));
  const BigInt big_m = opt.dummy_m ? *opt.dummy_m : dummy_m_for(m, oracle.outcome_bound(), project(y0.y, subset));

  Workspace<Arith> ws(subset, opt.tolerances);
  ws.add(y0);
  for (std::size_t q = 0; q < m; ++q) {
    std::vector<BigInt> dummy(m, 0);
    dummy[q] = big_m;
    ws.add_artificial(dummy);
  }
  if (!ws.hull().full_dimensional()) throw EngineError("initial point and dummy points are affinely dependent");
  explore(ws, Policy::Dummy, solve, opt, phase, stats, certificates);
  return ws.real_vertices();
}

template <class Arith>
std::optional<std::vector<OutcomePoint>> run_boundary(const WeightedSumOracle& oracle,
                                                      const std::vector<int>& subset,
                                                      const std::vector<OutcomePoint>& init,
                                                      const EngineOptions& opt, Phase phase, RunStats& stats,
                                                      std::vector<FacetCertificate>* certificates) {
  const std::int64_t bound = oracle.outcome_bound();
  Workspace<Arith> ws(subset, opt.tolerances);
  for (const auto& y : init) ws.add(y);
  // Dominated by every outcome: no facet through it has a positive normal.
  ws.add_artificial(std::vector<BigInt>(subset.size(), BigInt(bound) + 1));
  if (!ws.hull().full_dimensional()) return std::nullopt;
  const SubsetSolver solve{oracle, subset, oracle.objectives(), bound, stats};
  explore(ws, Policy::Boundary, solve, opt, phase, stats, certificates);
  return ws.real_vertices();
}

// final_filter on the projection onto `subset`, returning full points.
std::vector<OutcomePoint> filter_projected(const std::vector<OutcomePoint>& pts, const std::vector<int>& subset) {
  std::vector<OutcomePoint> projected;
  std::map<std::vector<std::int64_t>, OutcomePoint> lift;
  for (const auto& y : pts) {
    auto py = project(y.y, subset);
    if (lift.emplace(py, y).second) projected.push_back(OutcomePoint{py, std::nullopt});
  }
  if (subset.size() == 1) {
    auto best = std::min_element(projected.begin(), projected.end(), lex_less);
    return {lift.at(best->y)};
  }
  std::vector<OutcomePoint> out;
  for (const auto& py : final_filter(std::move(projected))) out.push_back(lift.at(py.y));
  return out;
}

template <class Arith>
FrontierResult run_dummy_top(const WeightedSumOracle& oracle, const EngineOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  FrontierResult result;
  const auto subset = all_objectives(oracle.objectives());
  auto verts = run_dummy<Arith>(oracle, subset, opt, Phase::Main, result.stats,
                                Arith::exact ? &result.facet_certificates : nullptr);
  result.points = final_filter(std::move(verts));
  result.stats.extreme_points_found = result.points.size();
  result.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class Arith>
FrontierResult run_bd_top(const WeightedSumOracle& oracle, const EngineOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t p = oracle.objectives();
  if (p < 2) throw std::invalid_argument("bd_dichotomy needs at least two objectives");
  FrontierResult result;
  RunStats& stats = result.stats;
  std::map<std::vector<int>, std::vector<OutcomePoint>> memo;

  for (std::size_t k = 0; k < p; ++k) {
    const std::vector<int> single{int(k)};
    const SubsetSolver solve{oracle, single, p, oracle.outcome_bound(), stats};
    memo[single] = {solve(ones_weight<Arith>(1))};
  }

  for (std::size_t m = 2; m <= p; ++m) {
    // Subsets of size m in lexicographic order.
    std::vector<char> pick(p, 0);
    std::fill(pick.begin(), pick.begin() + long(m), 1);
    do {
      std::vector<int> subset;
      for (std::size_t k = 0; k < p; ++k)
        if (pick[k]) subset.push_back(int(k));
      const bool top = m == p;

      std::vector<OutcomePoint> init;
      for (std::size_t drop = 0; drop < m; ++drop) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < m; ++i)
          if (i != drop) sub.push_back(subset[i]);
        const auto& pts = memo.at(sub);
        init.insert(init.end(), pts.begin(), pts.end());
      }
      sort_unique(init);

      if (top) stats.init_solver_calls = stats.solver_calls;
      auto* certs = top && Arith::exact ? &result.facet_certificates : nullptr;
      const Phase phase = top ? Phase::Main : Phase::Initialization;
      auto found = run_boundary<Arith>(oracle, subset, init, opt, phase, stats, certs);
      if (!found) {
        stats.warnings.push_back("initial points for objectives of size " + std::to_string(m) +
                                 " are not full-dimensional; fell back to dummy points");
        found = run_dummy<Arith>(oracle, subset, opt, phase, stats, certs);
      }
      memo[subset] = filter_projected(*found, subset);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }

  result.points = memo.at(all_objectives(p));
  sort_unique(result.points);
  result.stats.extreme_points_found = result.points.size();
  result.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class Arith>
BalloonResult run_balloon(const WeightedSumOracle& oracle, const std::vector<OutcomePoint>& init,
                          const EngineOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  BalloonResult result;
  const auto subset = all_objectives(oracle.objectives());
  Workspace<Arith> ws(subset, opt.tolerances);
  for (const auto& y : init) ws.add(y);
  if (!ws.hull().full_dimensional())
    throw NotFullDimensional("initial points do not span a full-dimensional hull");
  const SubsetSolver solve{oracle, subset, oracle.objectives(), oracle.outcome_bound(), result.stats};
  explore(ws, Policy::Balloon, solve, opt, Phase::Main, result.stats, nullptr);
  result.vertices = ws.real_vertices();
  sort_unique(result.vertices);
  result.stats.extreme_points_found = result.vertices.size();
  result.stats.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

BigInt safe_dummy_bound(std::size_t p, const BigInt& bound) {
  BigInt factorial = 1;
  for (std::size_t k = 2; k <= p; ++k) factorial *= k;
  return 1 + BigInt(p) * factorial * boost::multiprecision::pow(bound, unsigned(p));
}

DummyConfig make_dummies(const WeightedSumOracle& oracle, const OutcomePoint& y0) {
  const std::size_t p = oracle.objectives();
  DummyConfig cfg;
  cfg.m = dummy_m_for(p, oracle.outcome_bound(), y0.y);
  for (std::size_t q = 0; q < p; ++q) {
    std::vector<BigInt> d(p, 0);
    d[q] = cfg.m;
    cfg.dummy_points.push_back(std::move(d));
  }
  return cfg;
}

FrontierResult dummy_dichotomy(const WeightedSumOracle& oracle, const EngineOptions& options) {
  if (options.arithmetic == Arithmetic::Exact) return run_dummy_top<ExactArithmetic>(oracle, options);
  return run_dummy_top<FloatArithmetic>(oracle, options);
}

FrontierResult bd_dichotomy(const WeightedSumOracle& oracle, const EngineOptions& options) {
  if (options.arithmetic == Arithmetic::Exact) return run_bd_top<ExactArithmetic>(oracle, options);
  return run_bd_top<FloatArithmetic>(oracle, options);
}

BalloonResult inflate_balloon(const WeightedSumOracle& oracle, const std::vector<OutcomePoint>& init,
                              const EngineOptions& options) {
  if (options.arithmetic == Arithmetic::Exact) return run_balloon<ExactArithmetic>(oracle, init, options);
  return run_balloon<FloatArithmetic>(oracle, init, options);
}

std::vector<OutcomePoint> initial_points(const WeightedSumOracle& oracle, bool lexicographic, RunStats& stats,
                                         const EngineOptions& options) {
  const std::size_t p = oracle.objectives();
  const bool exact = options.arithmetic == Arithmetic::Exact;
  auto make_weight = [&](std::vector<BigInt> v) {
    if (exact) return Weight::exact(std::move(v));
    std::vector<double> d;
    for (const auto& x : v) d.push_back(numerics::to_double(x));
    return Weight::floating(std::move(d));
  };

  std::vector<OutcomePoint> pts;
  if (lexicographic) {
    for (std::size_t k = 0; k < p; ++k) {
      const std::vector<int> single{int(k)};
      const SubsetSolver solve{oracle, single, p, oracle.outcome_bound(), stats};
      pts.push_back(solve(make_weight({1})));
    }
  } else {
    pts.push_back(oracle.solve(make_weight(std::vector<BigInt>(p, 1)), stats));
  }
  sort_unique(pts);

  auto diff = [](const OutcomePoint& a, const OutcomePoint& b) {
    std::vector<BigInt> r;
    for (std::size_t k = 0; k < a.y.size(); ++k) r.push_back(BigInt(a.y[k]) - b.y[k]);
    return r;
  };

  std::vector<OutcomePoint> basis{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t b = 1; b < basis.size(); ++b) rows.push_back(diff(basis[b], basis[0]));
    rows.push_back(diff(pts[i], basis[0]));
    if (numerics::rank(rows) == rows.size()) basis.push_back(pts[i]);
  }

  while (basis.size() < p + 1) {
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t b = 1; b < basis.size(); ++b) rows.push_back(diff(basis[b], basis[0]));
    for (std::size_t k = 0; k < p && rows.size() < p - 1; ++k) {
      auto trial = rows;
      std::vector<BigInt> unit(p, 0);
      unit[k] = 1;
      trial.push_back(unit);
      if (numerics::rank(trial) == trial.size()) rows = std::move(trial);
    }
    const auto normal = numerics::cross(rows);
    const BigInt level = numerics::dot(normal, basis[0].y);
    bool grown = false;
    for (int sign : {1, -1}) {
      std::vector<BigInt> dir = normal;
      for (auto& v : dir) v *= sign;
      const OutcomePoint y = oracle.solve(make_weight(dir), stats);
      if (sign * (numerics::dot(normal, y.y) - level) < 0) {
        basis.push_back(y);
        pts.push_back(y);
        grown = true;
        break;
      }
    }
    if (!grown) throw NotFullDimensional("outcome set lies in a hyperplane; conv Y is not full-dimensional");
  }
  sort_unique(pts);
  return pts;
}

bool dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    strict = strict || a[k] < b[k];
  }
  return strict;
}

std::vector<OutcomePoint> final_filter(std::vector<OutcomePoint> points) {
  if (points.empty()) throw std::invalid_argument("final_filter: empty point set");
  sort_unique(points);
  const std::size_t p = points.front().y.size();
  std::int64_t bound = 1;
  for (const auto& y : points) {
    if (y.y.size() != p) throw std::invalid_argument("final_filter: mixed dimensions");
    for (auto v : y.y) {
      if (v <= 0) throw std::invalid_argument("final_filter: coordinates must be positive");
      bound = std::max(bound, v);
    }
  }
  if (p == 1) return {points.front()};

  geometry::ExactHull hull(p);
  for (const auto& y : points) hull.insert(geometry::to_exact_point(y.y));
  const BigInt big_m = safe_dummy_bound(p, bound);
  for (std::size_t q = 0; q < p; ++q) {
    std::vector<BigInt> d(p, 0);
    d[q] = big_m;
    hull.insert(d);
  }
  std::vector<OutcomePoint> kept;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (hull.is_vertex(i)) kept.push_back(points[i]);

  std::vector<OutcomePoint> out;
  for (const auto& y : kept) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const OutcomePoint& o) { return dominates(o.y, y.y); });
    if (!dominated) out.push_back(y);
  }
  return out;
}

}  // namespace dichotomy::engine
