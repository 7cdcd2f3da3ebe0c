// Incremental (beneath-beyond) convex hull in R^p, 2 <= p <= 5, with
// simplicial facets carrying inward normals and an explored flag.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dichotomy/types.hpp"

namespace dichotomy::geometry {

class HullError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PointId = std::size_t;
using FacetId = std::size_t;

enum class InsertOutcome {
  NewVertex,
  InteriorOrBoundary,
  /// Stored while fewer than p+1 affinely independent points are known.
  Buffered,
};

template <class Arith>
struct Facet {
  using Scalar = typename Arith::Scalar;

  std::vector<PointId> vertices;   // exactly p
  std::vector<FacetId> neighbors;  // neighbors[i] shares the ridge opposite vertices[i]
  /// Hyperplane normal·x = offset; the hull satisfies normal·x >= offset.
  /// Exact: gcd-reduced. Float: unit 1-norm.
  std::vector<Scalar> inward_normal;
  Scalar offset{};
  bool explored = false;
  bool alive = true;
};

template <class Arith>
class ConvexHull {
 public:
  using Scalar = typename Arith::Scalar;
  using Point = std::vector<Scalar>;
  using FacetType = Facet<Arith>;

  struct InsertResult {
    PointId id;
    InsertOutcome outcome;
  };

  explicit ConvexHull(std::size_t dim, FloatTolerances tol = {});

  std::size_t dim() const { return dim_; }
  bool full_dimensional() const { return full_; }

  /// Beneath-beyond insertion. Points on the boundary are not new vertices.
  InsertResult insert(Point x);

  const Point& point(PointId id) const { return points_.at(id); }
  std::size_t point_count() const { return points_.size(); }

  /// Ids of the current extreme points, ascending.
  std::vector<PointId> vertices() const;
  bool is_vertex(PointId id) const { return id < incidence_.size() && incidence_[id] > 0; }

  const FacetType& facet(FacetId id) const { return facets_.at(id); }
  std::size_t facet_slots() const { return facets_.size(); }
  std::vector<FacetId> alive_facets() const;
  /// Alive and unexplored, in creation order.
  std::vector<FacetId> unexplored_facets() const;
  /// First unexplored facet in creation order, or nullopt.
  std::optional<FacetId> next_unexplored();
  void mark_explored(FacetId id);

  /// normal·x - offset (>= 0 inside).
  Scalar signed_distance(FacetId id, const Point& x) const;

  /// Affinely independent points collected so far (all of them once full).
  const std::vector<PointId>& basis() const { return basis_; }

  /// One line per alive facet: "n_1 ... n_p | offset | id_1 ... id_p".
  std::string dump() const;

 private:
  enum class Side { Inside, On, Beyond };

  Side classify(const FacetType& f, const Point& x) const;
  bool extends_basis(const Point& x) const;
  void build_simplex();
  InsertOutcome insert_full(PointId id);
  FacetId make_facet(std::vector<PointId> verts);
  void orient(FacetType& f) const;

  std::size_t dim_;
  FloatTolerances tol_;
  bool full_ = false;
  std::vector<Point> points_;
  std::vector<PointId> basis_;
  std::vector<PointId> buffered_;
  std::vector<FacetType> facets_;
  std::vector<std::size_t> incidence_;  // alive facets per point
  FacetId cursor_ = 0;
  Point interior_;  // exact: sum of simplex vertices (scaled by p+1)
};

extern template class ConvexHull<ExactArithmetic>;
extern template class ConvexHull<FloatArithmetic>;

using ExactHull = ConvexHull<ExactArithmetic>;
using FloatHull = ConvexHull<FloatArithmetic>;

/// Scalarization weight defined by a facet: gcd-reduced inward normal in exact
/// mode, unit 1-norm inward normal in float mode.
Weight facet_weight(const Facet<ExactArithmetic>& f);
Weight facet_weight(const Facet<FloatArithmetic>& f);

/// All inward-normal components strictly positive (> positivity in float mode).
bool is_nondominated_facet(const Facet<ExactArithmetic>& f);
bool is_nondominated_facet(const Facet<FloatArithmetic>& f, double positivity = 1e-12);

/// Convenience conversions for integer points.
ExactHull::Point to_exact_point(const std::vector<std::int64_t>& y);
FloatHull::Point to_float_point(const std::vector<std::int64_t>& y);

}  // namespace dichotomy::geometry
