#include "dichotomy/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dichotomy::numerics {

BigInt det(SquareMatrix<BigInt> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact division is guaranteed by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SquareMatrix<BigInt> make_matrix(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t n = rows.size();
  std::vector<BigInt> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("det: matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return SquareMatrix<BigInt>(n, std::move(flat));
}

double det(SquareMatrix<double> m) {
  const std::size_t n = m.size();
  double result = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      result = -result;
    }
    result *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return result;
}

std::vector<BigInt> gcd_reduce(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs(x));
  if (g == 0) throw std::domain_error("gcd_reduce: zero vector (degenerate normal)");
  if (g != 1)
    for (auto& x : v) x /= g;
  return v;
}

std::size_t rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const BigInt a = rows[r][c], b = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
      if (std::any_of(rows[i].begin(), rows[i].end(), [](const BigInt& x) { return x != 0; }))
        rows[i] = gcd_reduce(std::move(rows[i]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  double scale = 0.0;
  for (const auto& row : rows)
    for (double x : row) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0;
  const double eps = tol * scale;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
    if (std::abs(rows[piv][c]) <= eps) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const double f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

template <class T>
std::vector<T> cross_impl(const std::vector<std::vector<T>>& rows) {
  const std::size_t m = rows.size();
  const std::size_t p = m + 1;
  for (const auto& r : rows)
    if (r.size() != p) throw std::invalid_argument("cross: need p-1 rows of length p");
  std::vector<T> out(p);
  for (std::size_t j = 0; j < p; ++j) {
    SquareMatrix<T> minor(m);
    for (std::size_t r = 0; r < m; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < p; ++c) {
        if (c == j) continue;
        minor(r, cc++) = rows[r][c];
      }
    }
    T d = det(std::move(minor));
    out[j] = (j % 2 == 0) ? d : T(-d);
  }
  return out;
}

}  // namespace

std::vector<BigInt> cross(const std::vector<std::vector<BigInt>>& rows) { return cross_impl(rows); }
std::vector<double> cross(const std::vector<std::vector<double>>& rows) { return cross_impl(rows); }

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt dot(std::span<const BigInt> a, std::span<const std::int64_t> b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

std::string to_string(std::span<const BigInt> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace dichotomy::numerics
