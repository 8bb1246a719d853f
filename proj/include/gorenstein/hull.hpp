#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gorenstein/lattice.hpp"

namespace gorenstein {

namespace detail {

// Inverse of a square integer matrix over the rationals (Gauss-Jordan).
inline std::vector<std::vector<Rational>> rational_inverse(const IntegerMatrix& a) {
  const std::size_t d = a.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = Rational(a[i][j]);
    m[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) throw std::logic_error("singular matrix in hull seed");
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < 2 * d; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) inv[i][j] = m[i][d + j];
  return inv;
}

// Smallest positive integer multiple of a rational vector, made primitive.
inline IntegerVector primitive_multiple(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) {
    Integer den = boost::multiprecision::denominator(x);
    l = l / gcd(l, den) * den;
  }
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
  Integer g = content(out);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace detail

/// Facets of the convex hull of points that affinely span Z^k, by the
/// double description method on the homogenised cone. Each result y is a
/// primitive integer vector with y[0] + sum_i y[i+1] * p[i] >= 0 on every
/// point p, with equality exactly on the points of the facet.
inline IntegerMatrix full_dimensional_hull(const IntegerMatrix& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  const std::size_t k = points.front().size();
  const std::size_t d = k + 1;
  const std::size_t m = points.size();
  IntegerMatrix constraint(m, IntegerVector(d));
  for (std::size_t i = 0; i < m; ++i) {
    constraint[i][0] = 1;
    for (std::size_t j = 0; j < k; ++j) constraint[i][j + 1] = points[i][j];
  }

  // Seed simplex: greedily pick d affinely independent points.
  std::vector<std::size_t> seed;
  IntegerMatrix seed_rows;
  for (std::size_t i = 0; i < m && seed.size() < d; ++i) {
    seed_rows.push_back(constraint[i]);
    if (matrix_rank(seed_rows) == seed_rows.size())
      seed.push_back(i);
    else
      seed_rows.pop_back();
  }
  if (seed.size() != d) throw std::invalid_argument("points do not affinely span the space");

  struct Ray {
    IntegerVector y;
    boost::dynamic_bitset<> zeros;
  };
  std::vector<Ray> rays;
  auto inverse = detail::rational_inverse(seed_rows);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> column(d);
    for (std::size_t i = 0; i < d; ++i) column[i] = inverse[i][j];
    Ray r{detail::primitive_multiple(column), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) r.zeros.set(seed[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (std::size_t i : seed) processed[i] = true;
  for (std::size_t c = 0; c < m; ++c) {
    if (processed[c]) continue;
    processed[c] = true;
    std::vector<Integer> value(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(constraint[c], rays[r].y);
      if (value[r] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (value[r] == 0) rays[r].zeros.set(c);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (value[n] >= 0) continue;
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != n && common.is_subset_of(rays[o].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntegerVector y(d);
        for (std::size_t t = 0; t < d; ++t) y[t] = value[p] * rays[n].y[t] - value[n] * rays[p].y[t];
        Integer g = content(y);
        if (g > 1)
          for (auto& x : y) x /= g;
        common.set(c);
        next.push_back({std::move(y), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] < 0) continue;
      if (value[r] == 0) rays[r].zeros.set(c);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  IntegerMatrix out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  return out;
}

}  // namespace gorenstein
