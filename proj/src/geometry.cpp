#include "dichotomy/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace dichotomy::geometry {

using numerics::BigInt;

template <class Arith>
ConvexHull<Arith>::ConvexHull(std::size_t dim, FloatTolerances tol) : dim_(dim), tol_(tol) {
  if (dim < 2 || dim > 5) throw std::invalid_argument("ConvexHull: dimension must be in [2,5]");
}

template <class Arith>
auto ConvexHull<Arith>::insert(Point x) -> InsertResult {
  if (x.size() != dim_) throw std::invalid_argument("ConvexHull::insert: wrong point dimension");
  if constexpr (!Arith::exact) {
    for (double v : x) numerics::FloatScalar checked(v);
  }
  const PointId id = points_.size();
  points_.push_back(std::move(x));
  incidence_.push_back(0);

  if (full_) return {id, insert_full(id)};

  const Point& p = points_[id];
  for (PointId other = 0; other < id; ++other)
    if (points_[other] == p) return {id, InsertOutcome::InteriorOrBoundary};

  if (!extends_basis(p)) {
    buffered_.push_back(id);
    return {id, InsertOutcome::Buffered};
  }
  basis_.push_back(id);
  if (basis_.size() < dim_ + 1) return {id, InsertOutcome::Buffered};

  build_simplex();
  auto pending = std::move(buffered_);
  buffered_.clear();
  for (PointId b : pending) insert_full(b);
  return {id, InsertOutcome::NewVertex};
}

template <class Arith>
bool ConvexHull<Arith>::extends_basis(const Point& x) const {
  if (basis_.empty()) return true;
  const Point& origin = points_[basis_.front()];
  std::vector<std::vector<Scalar>> rows;
  auto diff = [&](const Point& v) {
    std::vector<Scalar> r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = v[k] - origin[k];
    return r;
  };
  for (std::size_t i = 1; i < basis_.size(); ++i) rows.push_back(diff(points_[basis_[i]]));
  rows.push_back(diff(x));
  if constexpr (Arith::exact) {
    return numerics::rank(std::move(rows)) == basis_.size();
  } else {
    return numerics::rank(std::move(rows), tol_.rank) == basis_.size();
  }
}

template <class Arith>
void ConvexHull<Arith>::build_simplex() {
  interior_.assign(dim_, Scalar{});
  for (PointId b : basis_)
    for (std::size_t k = 0; k < dim_; ++k) interior_[k] += points_[b][k];
  if constexpr (!Arith::exact) {
    for (auto& v : interior_) v /= double(dim_ + 1);
  }
  full_ = true;

  // Facet i omits basis_[i]; its neighbor opposite basis_[j] omits basis_[j].
  std::vector<FacetId> ids;
  for (std::size_t i = 0; i <= dim_; ++i) {
    std::vector<PointId> verts;
    for (std::size_t j = 0; j <= dim_; ++j)
      if (j != i) verts.push_back(basis_[j]);
    ids.push_back(make_facet(std::move(verts)));
  }
  for (std::size_t i = 0; i <= dim_; ++i) {
    FacetType& f = facets_[ids[i]];
    for (std::size_t slot = 0; slot < dim_; ++slot) {
      const PointId v = f.vertices[slot];
      const auto j = std::size_t(std::find(basis_.begin(), basis_.end(), v) - basis_.begin());
      f.neighbors[slot] = ids[j];
    }
  }
}

template <class Arith>
FacetId ConvexHull<Arith>::make_facet(std::vector<PointId> verts) {
  FacetType f;
  const Point& origin = points_[verts.front()];
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    std::vector<Scalar> r(dim_);
    for (std::size_t k = 0; k < dim_; ++k) r[k] = points_[verts[i]][k] - origin[k];
    rows.push_back(std::move(r));
  }
  auto n = numerics::cross(rows);
  if constexpr (Arith::exact) {
    if (std::all_of(n.begin(), n.end(), [](const BigInt& v) { return v == 0; }))
      throw HullError("degenerate facet (affinely dependent vertices)");
    n = numerics::gcd_reduce(std::move(n));
  } else {
    double norm = 0.0;
    for (double v : n) norm += std::abs(v);
    if (!(norm > 0.0) || !std::isfinite(norm)) throw HullError("degenerate facet (zero normal)");
    for (double& v : n) v /= norm;
  }
  f.inward_normal = std::move(n);
  f.offset = numerics::dot(std::span<const Scalar>(f.inward_normal), std::span<const Scalar>(origin));
  f.vertices = std::move(verts);
  f.neighbors.assign(dim_, FacetId(-1));
  orient(f);
  for (PointId v : f.vertices) ++incidence_[v];
  facets_.push_back(std::move(f));
  return facets_.size() - 1;
}

template <class Arith>
void ConvexHull<Arith>::orient(FacetType& f) const {
  const Scalar at_interior =
      numerics::dot(std::span<const Scalar>(f.inward_normal), std::span<const Scalar>(interior_));
  Scalar s;
  if constexpr (Arith::exact) {
    s = at_interior - BigInt(dim_ + 1) * f.offset;
  } else {
    s = at_interior - f.offset;
  }
  if (s == 0) throw HullError("facet hyperplane passes through the interior reference point");
  if (s < 0) {
    for (auto& v : f.inward_normal) v = -v;
    f.offset = -f.offset;
  }
}

template <class Arith>
auto ConvexHull<Arith>::classify(const FacetType& f, const Point& x) const -> Side {
  const Scalar d =
      numerics::dot(std::span<const Scalar>(f.inward_normal), std::span<const Scalar>(x)) - f.offset;
  if constexpr (Arith::exact) {
    if (d < 0) return Side::Beyond;
    return d == 0 ? Side::On : Side::Inside;
  } else {
    const double eps = tol_.visibility * (1.0 + std::abs(f.offset));
    if (d < -eps) return Side::Beyond;
    return d <= eps ? Side::On : Side::Inside;
  }
}

template <class Arith>
InsertOutcome ConvexHull<Arith>::insert_full(PointId id) {
  const Point x = points_[id];
  std::vector<char> in_region(facets_.size(), 0);
  std::vector<FacetId> region;
  for (FacetId f = 0; f < facets_.size(); ++f) {
    if (facets_[f].alive && classify(facets_[f], x) == Side::Beyond) {
      in_region[f] = 1;
      region.push_back(f);
    }
  }
  if (region.empty()) return InsertOutcome::InteriorOrBoundary;

  // Grow through coplanar neighbors so flattened vertices disappear too.
  for (std::size_t head = 0; head < region.size(); ++head) {
    for (FacetId g : facets_[region[head]].neighbors) {
      if (in_region[g]) continue;
      if (classify(facets_[g], x) != Side::Inside) {
        in_region[g] = 1;
        region.push_back(g);
      }
    }
  }

  std::vector<FacetId> created;
  for (FacetId f : region) {
    for (std::size_t slot = 0; slot < dim_; ++slot) {
      const FacetId g = facets_[f].neighbors[slot];
      if (in_region[g]) continue;
      std::vector<PointId> verts;
      for (std::size_t k = 0; k < dim_; ++k)
        if (k != slot) verts.push_back(facets_[f].vertices[k]);
      verts.push_back(id);
      const FacetId nf = make_facet(std::move(verts));
      in_region.push_back(0);
      facets_[nf].neighbors[dim_ - 1] = g;
      auto& back = facets_[g].neighbors;
      *std::find(back.begin(), back.end(), f) = nf;
      created.push_back(nf);
    }
  }

  // Stitch new facets along ridges through the new point.
  std::map<std::vector<PointId>, std::vector<std::pair<FacetId, std::size_t>>> ridges;
  for (FacetId nf : created) {
    const auto& verts = facets_[nf].vertices;
    for (std::size_t slot = 0; slot + 1 < dim_; ++slot) {
      std::vector<PointId> key;
      for (std::size_t k = 0; k + 1 < dim_; ++k)
        if (k != slot) key.push_back(verts[k]);
      std::sort(key.begin(), key.end());
      ridges[key].emplace_back(nf, slot);
    }
  }
  for (const auto& [key, sides] : ridges) {
    if (sides.size() != 2) throw HullError("non-manifold horizon while inserting a point");
    facets_[sides[0].first].neighbors[sides[0].second] = sides[1].first;
    facets_[sides[1].first].neighbors[sides[1].second] = sides[0].first;
  }

  for (FacetId f : region) {
    facets_[f].alive = false;
    for (PointId v : facets_[f].vertices) --incidence_[v];
  }
  return InsertOutcome::NewVertex;
}

template <class Arith>
std::vector<PointId> ConvexHull<Arith>::vertices() const {
  std::vector<PointId> out;
  for (PointId i = 0; i < incidence_.size(); ++i)
    if (incidence_[i] > 0) out.push_back(i);
  return out;
}

template <class Arith>
std::vector<FacetId> ConvexHull<Arith>::alive_facets() const {
  std::vector<FacetId> out;
  for (FacetId f = 0; f < facets_.size(); ++f)
    if (facets_[f].alive) out.push_back(f);
  return out;
}

template <class Arith>
std::vector<FacetId> ConvexHull<Arith>::unexplored_facets() const {
  std::vector<FacetId> out;
  for (FacetId f = 0; f < facets_.size(); ++f)
    if (facets_[f].alive && !facets_[f].explored) out.push_back(f);
  return out;
}

template <class Arith>
std::optional<FacetId> ConvexHull<Arith>::next_unexplored() {
  while (cursor_ < facets_.size() && (!facets_[cursor_].alive || facets_[cursor_].explored))
    ++cursor_;
  if (cursor_ == facets_.size()) return std::nullopt;
  return cursor_;
}

template <class Arith>
void ConvexHull<Arith>::mark_explored(FacetId id) {
  facets_.at(id).explored = true;
}

template <class Arith>
auto ConvexHull<Arith>::signed_distance(FacetId id, const Point& x) const -> Scalar {
  const FacetType& f = facets_.at(id);
  return numerics::dot(std::span<const Scalar>(f.inward_normal), std::span<const Scalar>(x)) -
         f.offset;
}

template <class Arith>
std::string ConvexHull<Arith>::dump() const {
  std::ostringstream os;
  if constexpr (!Arith::exact) os.precision(17);
  for (FacetId f : alive_facets()) {
    const FacetType& fc = facets_[f];
    for (std::size_t k = 0; k < dim_; ++k) os << (k ? " " : "") << fc.inward_normal[k];
    os << " | " << fc.offset << " |";
    for (PointId v : fc.vertices) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

template class ConvexHull<ExactArithmetic>;
template class ConvexHull<FloatArithmetic>;

Weight facet_weight(const Facet<ExactArithmetic>& f) { return Weight::exact(f.inward_normal); }

Weight facet_weight(const Facet<FloatArithmetic>& f) {
  std::vector<double> w = f.inward_normal;
  double norm = 0.0;
  for (double v : w) norm += std::abs(v);
  if (!(norm > 0.0)) throw std::domain_error("facet_weight: zero normal");
  for (double& v : w) v /= norm;
  return Weight::floating(std::move(w));
}

bool is_nondominated_facet(const Facet<ExactArithmetic>& f) {
  return std::all_of(f.inward_normal.begin(), f.inward_normal.end(),
                     [](const BigInt& v) { return v > 0; });
}

bool is_nondominated_facet(const Facet<FloatArithmetic>& f, double positivity) {
  return std::all_of(f.inward_normal.begin(), f.inward_normal.end(),
                     [positivity](double v) { return v > positivity; });
}

ExactHull::Point to_exact_point(const std::vector<std::int64_t>& y) {
  return ExactHull::Point(y.begin(), y.end());
}

FloatHull::Point to_float_point(const std::vector<std::int64_t>& y) {
  FloatHull::Point out;
  out.reserve(y.size());
  for (auto v : y) out.push_back(double(v));
  return out;
}

}  // namespace dichotomy::geometry
