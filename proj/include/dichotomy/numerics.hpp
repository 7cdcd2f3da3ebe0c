// Exact and floating scalars plus the small amount of linear algebra the
// hull and the oracle need (determinants, gcd reduction, rank).
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dichotomy::numerics {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A 64-bit float that is guaranteed finite.
class FloatScalar {
 public:
  FloatScalar() = default;
  explicit FloatScalar(double v) : value_(v) {
    if (!std::isfinite(v)) throw std::domain_error("FloatScalar: non-finite value");
  }
  double value() const { return value_; }
  friend auto operator<=>(const FloatScalar&, const FloatScalar&) = default;

 private:
  double value_ = 0.0;
};

/// Row-major square matrix.
template <class T>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}
  SquareMatrix(std::size_t n, std::vector<T> data) : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) throw std::invalid_argument("SquareMatrix: matrix is not square");
  }
  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Exact determinant via Bareiss fraction-free elimination.
BigInt det(SquareMatrix<BigInt> m);

/// Builds a square BigInt matrix from nested rows; throws on ragged input.
SquareMatrix<BigInt> make_matrix(const std::vector<std::vector<BigInt>>& rows);

/// Determinant by partial-pivot Gaussian elimination.
double det(SquareMatrix<double> m);

/// Divides by the gcd of absolute values. Throws on the zero vector.
std::vector<BigInt> gcd_reduce(std::vector<BigInt> v);

/// Rank of the row set (exact).
std::size_t rank(std::vector<std::vector<BigInt>> rows);

/// Rank of the row set; entries below `tol * max|entry|` count as zero.
std::size_t rank(std::vector<std::vector<double>> rows, double tol);

/// Vector orthogonal to the p-1 given rows of length p (generalized cross
/// product): component j is (-1)^j times the minor with column j removed.
std::vector<BigInt> cross(const std::vector<std::vector<BigInt>>& rows);
std::vector<double> cross(const std::vector<std::vector<double>>& rows);

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);
BigInt dot(std::span<const BigInt> a, std::span<const std::int64_t> b);
double dot(std::span<const double> a, std::span<const double> b);

inline bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

double to_double(const BigInt& v);

std::string to_string(std::span<const BigInt> v);

}  // namespace dichotomy::numerics
