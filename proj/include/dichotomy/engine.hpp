// Generalized dichotomic search for the nondominated extreme points of a
// multi-objective integer program: Inflate_Balloon, Dummy_Dichotomy and
// Bd_Dichotomy, plus dummy-point construction and final refiltering.
//
// Every variant maintains the convex hull of the points found so far and
// solves one weighted-sum problem per unexplored facet, using the facet's
// inward normal as weight. A solve either confirms the facet (the optimum lies
// on its hyperplane) or yields a point beyond it that is added to the hull.
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dichotomy/solvers.hpp"
#include "dichotomy/types.hpp"

namespace dichotomy::engine {

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the outcome set (or the initial points) spans less than R^p.
class NotFullDimensional : public EngineError {
 public:
  using EngineError::EngineError;
};

enum class Phase { Initialization, Main };

/// Reported once per weighted-sum solve issued by a dichotomy loop.
struct SolveEvent {
  Phase phase;
  /// Objectives of the (sub)problem being solved, ascending.
  std::vector<int> subset;
  /// Facet weight on `subset` (before any big-M composition).
  const Weight& weight;
  /// True when the optimum confirmed the facet, false when a new point was found.
  bool confirmed;
};

using SolveObserver = std::function<void(const SolveEvent&)>;

struct EngineOptions {
  Arithmetic arithmetic = Arithmetic::Exact;
  FloatTolerances tolerances{};
  /// Overrides the dummy-point coordinate M.
  std::optional<BigInt> dummy_m;
  std::size_t max_iterations = 50'000'000;
  SolveObserver observer;
};

struct DummyConfig {
  BigInt m;
  /// dummy_points[q] = M·e_q
  std::vector<std::vector<BigInt>> dummy_points;
};

/// Smallest M guaranteed to keep every supported extreme point of a point set
/// inside [1,B]^p extreme in conv(Y ∪ {M e_q}): 1 + p·p!·B^p.
BigInt safe_dummy_bound(std::size_t p, const BigInt& bound);

/// Dummy points for `oracle`, with M = max(safe_dummy_bound, 1 + Σ y0_k).
DummyConfig make_dummies(const solvers::WeightedSumOracle& oracle, const OutcomePoint& y0);

struct FacetCertificate {
  Weight weight;
  /// Optimal λᵀy shared by the facet vertices (exact runs only).
  BigInt value;
};

struct FrontierResult {
  /// Nondominated extreme points in canonical minimization space, sorted.
  std::vector<OutcomePoint> points;
  RunStats stats;
  /// Confirmed nondominated facet weights of the top-level problem (exact only).
  std::vector<FacetCertificate> facet_certificates;
};

/// Initializes with the all-ones optimum and p dummy points, then explores
/// every facet except conv{m^1..m^p}. In exact mode a selected facet with a
/// non-positive normal raises EngineError.
FrontierResult dummy_dichotomy(const solvers::WeightedSumOracle& oracle, const EngineOptions& options = {});

/// Initializes from the nondominated extreme points of every objective subset
/// (sizes 1..p-1, increasing, memoized) and explores only facets with strictly
/// positive normals.
FrontierResult bd_dichotomy(const solvers::WeightedSumOracle& oracle, const EngineOptions& options = {});

struct BalloonResult {
  /// Every extreme point of conv Y, sorted.
  std::vector<OutcomePoint> vertices;
  RunStats stats;
};

/// Explores every facet regardless of the sign of its normal. `init` must
/// contain p+1 affinely independent outcome points.
BalloonResult inflate_balloon(const solvers::WeightedSumOracle& oracle, const std::vector<OutcomePoint>& init,
                              const EngineOptions& options = {});

/// Lexicographic minimizers of each objective (or the all-ones optimum when
/// `lexicographic` is false), extended by solving along normals of their
/// affine hull until p+1 affinely independent points are known. Throws
/// NotFullDimensional when conv Y is lower-dimensional.
std::vector<OutcomePoint> initial_points(const solvers::WeightedSumOracle& oracle, bool lexicographic,
                                         RunStats& stats, const EngineOptions& options = {});

/// Keeps the supported extreme points: non-dummy vertices of the exact hull of
/// `points` plus fresh dummy points, minus any dominated point. Coordinates
/// must be positive; the input must be nonempty.
std::vector<OutcomePoint> final_filter(std::vector<OutcomePoint> points);

bool dominates(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

}  // namespace dichotomy::engine
