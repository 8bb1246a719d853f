#pragma once

// Reference implementations for the test suites. They share no code with
// the library beyond the Multigraph container and exact integers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "gorenstein/base_polytope.hpp"
#include "gorenstein/multigraph.hpp"

namespace oracle {

using gorenstein::Integer;
using gorenstein::Multigraph;
using gorenstein::Vertex;

/// Test fixture: a multigraph from a pair list.
inline Multigraph graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return Multigraph::from_pairs(n, pairs);
}

/// Matrix-Tree theorem: any principal (n-1)-minor of the Laplacian, by
/// Bareiss fraction-free elimination.
inline Integer matrix_tree_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  std::vector<std::vector<Integer>> a(n - 1, std::vector<Integer>(n - 1, 0));
  for (const auto& e : g.edges()) {
    auto add = [&](std::size_t i, std::size_t j, int v) {
      if (i < n - 1 && j < n - 1) a[i][j] += v;
    };
    add(e.u, e.u, 1);
    add(e.v, e.v, 1);
    add(e.u, e.v, -1);
    add(e.v, e.u, -1);
  }
  const std::size_t m = n - 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < m && a[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

inline bool connected_without(const Multigraph& g, std::vector<bool> gone) {
  const std::size_t n = g.vertex_count();
  std::size_t start = n;
  std::size_t alive = 0;
  for (Vertex x = 0; x < n; ++x)
    if (!gone[x]) {
      ++alive;
      if (start == n) start = x;
    }
  if (alive == 0) return false;
  std::vector<Vertex> stack{start};
  gone[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges()) {
      Vertex y = e.u == x ? e.v : e.v == x ? e.u : n;
      if (y != n && !gone[y]) {
        gone[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == alive;
}

/// 2-connected by definition: at least two vertices, connected, and no
/// single vertex whose removal disconnects (graphs on two vertices only
/// need an edge).
inline bool two_connected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return false;
  if (!connected_without(g, std::vector<bool>(n, false))) return false;
  if (n == 2) return true;
  for (Vertex x = 0; x < n; ++x) {
    std::vector<bool> gone(n, false);
    gone[x] = true;
    if (!connected_without(g, gone)) return false;
  }
  return true;
}

/// Least upper-triangle multiplicity sequence over all n! labelings.
inline std::vector<std::size_t> brute_canonical(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  auto m = g.multiplicity_matrix();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> best;
  do {
    std::vector<std::size_t> cur;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) cur.push_back(m[order[i]][order[j]]);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(order.begin(), order.end()));
  best.insert(best.begin(), n);
  return best;
}

/// Generate every multiplicity matrix within the bounds, keep the
/// 2-connected ones, and collapse isomorphic copies.
inline std::set<std::vector<std::size_t>> naive_census(std::size_t max_v, std::size_t max_e, std::size_t max_mult) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t n = 2; n <= max_v; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> mult(pairs.size(), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t total) {
      if (k == pairs.size()) {
        if (total == 0) return;
        Multigraph g(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
          for (std::size_t c = 0; c < mult[p]; ++c) g.add_edge(pairs[p].first, pairs[p].second);
        if (two_connected(g)) out.insert(brute_canonical(g));
        return;
      }
      for (std::size_t c = 0; c <= max_mult && total + c <= max_e; ++c) {
        mult[k] = c;
        rec(k + 1, total + c);
      }
      mult[k] = 0;
    };
    rec(0, 0);
  }
  return out;
}

/// Gorenstein points of delta P by scanning the whole grid [0, delta]^m on
/// the hyperplane sum x = delta * rank. Facets come from the caller.
inline std::vector<gorenstein::LatticePoint> grid_gorenstein_points(const gorenstein::BasePolytope& p,
                                                                     std::int64_t delta) {
  const std::size_t m = p.ambient_dim;
  const std::int64_t total = delta * static_cast<std::int64_t>(p.rank);
  std::vector<gorenstein::LatticePoint> out;
  gorenstein::LatticePoint x(m, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t sum) {
    if (i == m) {
      if (sum != total) return;
      for (const auto& f : p.facets) {
        Integer s = f.reduced.constant * delta;
        for (std::size_t k = 0; k < m; ++k) s -= f.reduced.coefficients[k] * x[k];
        if (s != f.reduced.divisor) return;
      }
      out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= delta && sum + v <= total; ++v) {
      x[i] = v;
      rec(i + 1, sum + v);
    }
    x[i] = 0;
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle
