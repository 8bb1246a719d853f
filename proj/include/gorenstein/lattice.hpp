#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gorenstein {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// gcd of all entries; 0 for the zero vector.
inline Integer content(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

inline Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Floor division for possibly negative numerators.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Row-style Hermite normal form of the lattice spanned by some rows:
/// zero rows dropped, pivots strictly increasing, pivot entries positive,
/// entries above a pivot reduced into [0, pivot).
struct HermiteBasis {
  IntegerMatrix rows;
  std::vector<std::size_t> pivots;
  std::size_t ambient_dim = 0;

  std::size_t rank() const noexcept { return rows.size(); }

  /// Integer coefficients c with sum_j c_j rows[j] == v, if v lies in the lattice.
  std::optional<IntegerVector> coordinates(const IntegerVector& v) const {
    IntegerVector residual = v;
    IntegerVector c(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const std::size_t p = pivots[j];
      if (residual[p] % rows[j][p] != 0) return std::nullopt;
      c[j] = residual[p] / rows[j][p];
      if (c[j] != 0)
        for (std::size_t k = p; k < ambient_dim; ++k) residual[k] -= c[j] * rows[j][k];
    }
    for (const auto& x : residual)
      if (x != 0) return std::nullopt;
    return c;
  }

  bool contains(const IntegerVector& v) const { return coordinates(v).has_value(); }
};

inline HermiteBasis hermite_normal_form(IntegerMatrix rows, std::size_t ambient_dim) {
  for (const auto& r : rows)
    if (r.size() != ambient_dim) throw std::invalid_argument("row length mismatch");
  HermiteBasis out;
  out.ambient_dim = ambient_dim;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ambient_dim && top < rows.size(); ++col) {
    // Euclid on the column until a single nonzero entry remains at `top`.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || abs_value(rows[i][col]) < abs_value(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = floor_div(rows[i][col], rows[top][col]);
        for (std::size_t k = col; k < ambient_dim; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t i = 0; i < top; ++i) {
      Integer q = floor_div(rows[i][col], rows[top][col]);
      if (q != 0)
        for (std::size_t k = col; k < ambient_dim; ++k) rows[i][k] -= q * rows[top][k];
    }
    out.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

/// An affine lattice origin + span(basis), with the basis in Hermite form.
struct AffineLattice {
  IntegerVector origin;
  HermiteBasis basis;

  std::size_t dimension() const noexcept { return basis.rank(); }

  bool contains(const IntegerVector& p) const {
    IntegerVector d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - origin[i];
    return basis.contains(d);
  }
};

/// Affine lattice generated by a point set: p_0 + Z{p_i - p_0}.
inline AffineLattice affine_lattice_of(const IntegerMatrix& points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  const std::size_t dim = points.front().size();
  IntegerMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntegerVector d(dim);
    for (std::size_t k = 0; k < dim; ++k) d[k] = points[i][k] - points[0][k];
    diffs.push_back(std::move(d));
  }
  return {points.front(), hermite_normal_form(std::move(diffs), dim)};
}

/// gcd of a linear functional over a lattice basis; the functional is
/// primitive on the lattice when this is 1.
inline Integer functional_content(const IntegerVector& normal, const HermiteBasis& basis) {
  Integer g = 0;
  for (const auto& row : basis.rows) g = gcd(g, dot(normal, row));
  return g;
}

/// Rational rank by fraction-free elimination.
inline std::size_t matrix_rank(IntegerMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Integer a = m[r][c], b = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] * a - m[r][k] * b;
      Integer g = content(m[i]);
      if (g > 1)
        for (auto& x : m[i]) x /= g;
    }
    ++r;
  }
  return r;
}

}  // namespace gorenstein
