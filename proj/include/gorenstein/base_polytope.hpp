#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gorenstein/connectivity.hpp"
#include "gorenstein/graphic_matroid.hpp"
#include "gorenstein/hull.hpp"
#include "gorenstein/lattice.hpp"
#include "gorenstein/multigraph.hpp"
#include "gorenstein/spanning_trees.hpp"

namespace gorenstein {

using LatticePoint = std::vector<std::int64_t>;

/// Affine functional that maps the lattice of a dilation onto Z. At dilation
/// delta the lattice distance of x is (delta * constant - coefficients . x) / divisor.
struct ReducedFunctional {
  IntegerVector coefficients;
  Integer constant = 0;
  Integer divisor = 1;

  Integer distance(const LatticePoint& x, std::int64_t delta = 1) const {
    Integer s = constant * delta;
    for (std::size_t i = 0; i < x.size(); ++i) s -= coefficients[i] * x[i];
    if (s % divisor != 0) throw std::logic_error("point is off the facet lattice");
    return s / divisor;
  }

  friend bool operator==(const ReducedFunctional&, const ReducedFunctional&) = default;
};

enum class FacetKind { nonnegativity, good_flat, hull };

inline const char* to_string(FacetKind k) {
  switch (k) {
    case FacetKind::nonnegativity: return "nonnegativity";
    case FacetKind::good_flat: return "good_flat";
    case FacetKind::hull: return "hull";
  }
  return "?";
}

/// Supporting inequality normal . x <= offset of P (scaled by delta for delta P),
/// together with its lattice-reduced form.
struct FacetInequality {
  FacetKind kind = FacetKind::hull;
  EdgeId edge{};          // nonnegativity only
  VertexSubset subset;    // good_flat only
  IntegerVector normal;
  Integer offset = 0;
  ReducedFunctional reduced;
};

struct BasePolytope {
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  std::vector<EdgeId> coordinates;  // edge id of each coordinate
  std::vector<LatticePoint> vertices;
  std::vector<FacetInequality> facets;

  std::size_t dimension() const noexcept { return ambient_dim == 0 ? 0 : ambient_dim - 1; }
};

struct GorensteinPoint {
  std::int64_t delta = 0;
  LatticePoint coordinates;

  friend bool operator==(const GorensteinPoint&, const GorensteinPoint&) = default;
};

namespace detail {

inline IntegerMatrix to_integer_matrix(const std::vector<LatticePoint>& pts) {
  IntegerMatrix out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.emplace_back(p.begin(), p.end());
  return out;
}

inline std::int64_t to_int64(const Integer& x) {
  if (x > std::numeric_limits<std::int64_t>::max() / 4 || x < std::numeric_limits<std::int64_t>::min() / 4)
    throw std::overflow_error("coefficient out of machine range");
  return x.convert_to<std::int64_t>();
}

// Divides normal/offset by their content on the lattice.
inline ReducedFunctional reduce_on_lattice(const IntegerVector& normal, const Integer& offset,
                                           const HermiteBasis& basis) {
  Integer g = functional_content(normal, basis);
  if (g == 0) throw std::logic_error("functional is constant on the lattice");
  IntegerVector all = normal;
  all.push_back(offset);
  all.push_back(g);
  Integer common = content(all);
  ReducedFunctional r{normal, offset, g};
  for (auto& c : r.coefficients) c /= common;
  r.constant /= common;
  r.divisor /= common;
  return r;
}

}  // namespace detail

/// Indicator vectors of spanning trees, coordinates in graph edge order.
inline std::vector<LatticePoint> spanning_tree_vectors(const Multigraph& g) {
  std::vector<LatticePoint> out;
  for (const auto& tree : spanning_trees(g)) {
    LatticePoint x(g.edge_count(), 0);
    for (EdgeId id : tree) x[g.edge_index(id)] = 1;
    out.push_back(std::move(x));
  }
  return out;
}

/// Direction lattice of {x in Z^m : sum x = const}, basis e_i - e_{m-1}.
inline HermiteBasis hyperplane_lattice(std::size_t m) {
  IntegerMatrix rows;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    IntegerVector r(m, 0);
    r[i] = 1;
    r[m - 1] = -1;
    rows.push_back(std::move(r));
  }
  return hermite_normal_form(std::move(rows), m);
}

/// Base polytope of M(G) with facets read off the graph: x_e >= 0 for each
/// deletable edge, x(E(S)) <= |S| - 1 for each good flat S.
inline BasePolytope build_polytope(const Multigraph& g) {
  require_two_connected(g);
  BasePolytope p;
  p.ambient_dim = g.edge_count();
  p.rank = g.vertex_count() - 1;
  p.coordinates = g.edge_ids();
  p.vertices = spanning_tree_vectors(g);
  const HermiteBasis lattice = hyperplane_lattice(p.ambient_dim);
  for (EdgeId id : deletable_edges(g)) {
    FacetInequality f;
    f.kind = FacetKind::nonnegativity;
    f.edge = id;
    f.normal.assign(p.ambient_dim, 0);
    f.normal[g.edge_index(id)] = -1;
    f.offset = 0;
    f.reduced = detail::reduce_on_lattice(f.normal, f.offset, lattice);
    p.facets.push_back(std::move(f));
  }
  for (const GoodFlat& flat : good_flats(g)) {
    FacetInequality f;
    f.kind = FacetKind::good_flat;
    f.subset = flat.subset;
    f.normal.assign(p.ambient_dim, 0);
    for (EdgeId id : flat.induced_edges) f.normal[g.edge_index(id)] = 1;
    f.offset = static_cast<long long>(flat.subset.size() - 1);
    f.reduced = detail::reduce_on_lattice(f.normal, f.offset, lattice);
    p.facets.push_back(std::move(f));
  }
  return p;
}

/// Complete facet list of conv(vertices) computed from scratch: Hermite
/// reduction to the affine lattice the points span, double description in
/// lattice coordinates, then back to ambient coordinates.
inline std::vector<FacetInequality> hull_facets_oracle(const std::vector<LatticePoint>& vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("hull oracle needs at least two points");
  const IntegerMatrix pts = detail::to_integer_matrix(vertices);
  const std::size_t dim = pts.front().size();
  const AffineLattice lattice = affine_lattice_of(pts);
  const HermiteBasis& basis = lattice.basis;
  const std::size_t k = basis.rank();
  if (k == 0) throw std::invalid_argument("degenerate input: all points are equal");

  IntegerMatrix local;
  local.reserve(pts.size());
  for (const auto& p : pts) {
    IntegerVector d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = p[i] - lattice.origin[i];
    auto c = basis.coordinates(d);
    if (!c) throw std::logic_error("point outside its own lattice");
    local.push_back(std::move(*c));
  }

  std::vector<FacetInequality> out;
  for (const IntegerVector& y : full_dimensional_hull(local)) {
    // Lattice-coordinate form: (y0 + y'.lambda) / g >= 0, primitive on Z^k.
    IntegerVector yp(y.begin() + 1, y.end());
    const Integer g = content(yp);
    std::vector<Rational> target(k);
    for (std::size_t j = 0; j < k; ++j) target[j] = Rational(-yp[j], g);
    // Ambient a with basis.rows[j] . a == target[j]; non-pivot coordinates 0.
    std::vector<Rational> a(dim, Rational(0));
    for (std::size_t jj = k; jj-- > 0;) {
      const std::size_t pj = basis.pivots[jj];
      Rational s = target[jj];
      for (std::size_t l = jj + 1; l < k; ++l) s -= Rational(basis.rows[jj][basis.pivots[l]]) * a[basis.pivots[l]];
      a[pj] = s / Rational(basis.rows[jj][pj]);
    }
    Rational constant = Rational(y[0], g);
    for (std::size_t i = 0; i < dim; ++i) constant += a[i] * Rational(lattice.origin[i]);
    std::vector<Rational> all = a;
    all.push_back(constant);
    Integer l = 1;
    for (const auto& x : all) {
      Integer den = boost::multiprecision::denominator(x);
      l = l / gcd(l, den) * den;
    }
    FacetInequality f;
    f.kind = FacetKind::hull;
    f.normal.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) f.normal[i] = boost::multiprecision::numerator(Rational(a[i] * l));
    f.offset = boost::multiprecision::numerator(Rational(constant * l));
    f.reduced = detail::reduce_on_lattice(f.normal, f.offset, basis);
    out.push_back(std::move(f));
  }
  return out;
}

/// Same vertices as build_polytope, facets from the hull oracle.
inline BasePolytope oracle_polytope(const Multigraph& g) {
  require_two_connected(g);
  BasePolytope p;
  p.ambient_dim = g.edge_count();
  p.rank = g.vertex_count() - 1;
  p.coordinates = g.edge_ids();
  p.vertices = spanning_tree_vectors(g);
  p.facets = hull_facets_oracle(p.vertices);
  return p;
}

/// Lattice distances of every vertex from a facet at dilation 1.
inline std::vector<Integer> slack_vector(const FacetInequality& f, const std::vector<LatticePoint>& vertices) {
  std::vector<Integer> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(f.reduced.distance(v, 1));
  return out;
}

namespace detail {

// lo <= coefficients . x <= hi
struct BoxConstraint {
  std::vector<std::int64_t> coefficients;
  std::int64_t lo;
  std::int64_t hi;
};

// Depth-first enumeration of integer points in a box subject to linear
// constraints, pruning with suffix bounds of each constraint.
class BoxSearch {
 public:
  BoxSearch(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper, std::vector<BoxConstraint> constraints)
      : lower_(std::move(lower)), upper_(std::move(upper)), constraints_(std::move(constraints)) {
    const std::size_t n = lower_.size();
    suffix_min_.assign(constraints_.size(), std::vector<std::int64_t>(n + 1, 0));
    suffix_max_.assign(constraints_.size(), std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t c = 0; c < constraints_.size(); ++c)
      for (std::size_t i = n; i-- > 0;) {
        const std::int64_t a = constraints_[c].coefficients[i];
        const std::int64_t x = a * lower_[i], y = a * upper_[i];
        suffix_min_[c][i] = suffix_min_[c][i + 1] + std::min(x, y);
        suffix_max_[c][i] = suffix_max_[c][i + 1] + std::max(x, y);
      }
  }

  /// Calls visit on each point; stops early when visit returns false.
  void run(const std::function<bool(const LatticePoint&)>& visit) {
    LatticePoint x(lower_.size());
    std::vector<std::int64_t> partial(constraints_.size(), 0);
    stopped_ = false;
    recurse(0, x, partial, visit);
  }

 private:
  bool feasible(std::size_t i, const std::vector<std::int64_t>& partial) const {
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      if (partial[c] + suffix_min_[c][i] > constraints_[c].hi) return false;
      if (partial[c] + suffix_max_[c][i] < constraints_[c].lo) return false;
    }
    return true;
  }

  void recurse(std::size_t i, LatticePoint& x, std::vector<std::int64_t>& partial,
               const std::function<bool(const LatticePoint&)>& visit) {
    if (stopped_ || !feasible(i, partial)) return;
    if (i == x.size()) {
      if (!visit(x)) stopped_ = true;
      return;
    }
    for (std::int64_t v = lower_[i]; v <= upper_[i] && !stopped_; ++v) {
      x[i] = v;
      for (std::size_t c = 0; c < constraints_.size(); ++c) partial[c] += constraints_[c].coefficients[i] * v;
      recurse(i + 1, x, partial, visit);
      for (std::size_t c = 0; c < constraints_.size(); ++c) partial[c] -= constraints_[c].coefficients[i] * v;
    }
  }

  std::vector<std::int64_t> lower_, upper_;
  std::vector<BoxConstraint> constraints_;
  std::vector<std::vector<std::int64_t>> suffix_min_, suffix_max_;
  bool stopped_ = false;
};

enum class DistanceRule { at_least_zero, at_least_one, exactly_one };

inline BoxSearch dilation_search(const BasePolytope& p, std::int64_t delta, DistanceRule rule) {
  const std::size_t n = p.ambient_dim;
  std::vector<std::int64_t> lower(n, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> upper(n, std::numeric_limits<std::int64_t>::min());
  for (const auto& v : p.vertices)
    for (std::size_t i = 0; i < n; ++i) {
      lower[i] = std::min(lower[i], v[i] * delta);
      upper[i] = std::max(upper[i], v[i] * delta);
    }
  std::vector<BoxConstraint> cons;
  const auto total = static_cast<std::int64_t>(p.rank) * delta;
  cons.push_back({std::vector<std::int64_t>(n, 1), total, total});
  constexpr std::int64_t unbounded = std::numeric_limits<std::int64_t>::min() / 4;
  for (const auto& f : p.facets) {
    // distance >= t  <=>  coefficients . x <= delta * constant - t * divisor
    BoxConstraint c;
    for (const auto& a : f.reduced.coefficients) c.coefficients.push_back(to_int64(a));
    const std::int64_t dc = to_int64(f.reduced.constant) * delta;
    const std::int64_t div = to_int64(f.reduced.divisor);
    switch (rule) {
      case DistanceRule::at_least_zero: c.lo = unbounded; c.hi = dc; break;
      case DistanceRule::at_least_one: c.lo = unbounded; c.hi = dc - div; break;
      case DistanceRule::exactly_one: c.lo = c.hi = dc - div; break;
    }
    cons.push_back(std::move(c));
  }
  return BoxSearch(std::move(lower), std::move(upper), std::move(cons));
}

}  // namespace detail

/// Integer points of delta * P (on the hyperplane sum x = delta * rank).
inline std::vector<LatticePoint> lattice_points(const BasePolytope& p, std::int64_t delta) {
  if (delta < 1) throw std::invalid_argument("dilation must be positive");
  std::vector<LatticePoint> out;
  detail::dilation_search(p, delta, detail::DistanceRule::at_least_zero).run([&](const LatticePoint& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

/// Lattice point of delta * P at lattice distance exactly 1 from every facet.
inline std::optional<LatticePoint> gorenstein_point_at(const BasePolytope& p, std::int64_t delta) {
  std::optional<LatticePoint> hit;
  detail::dilation_search(p, delta, detail::DistanceRule::exactly_one).run([&](const LatticePoint& x) {
    hit = x;
    return false;
  });
  return hit;
}

/// Default dilation scan bound: max(|E|, 3) + 1.
inline std::int64_t default_delta_max(const Multigraph& g) {
  return static_cast<std::int64_t>(std::max<std::size_t>(g.edge_count(), 3)) + 1;
}

/// Every delta in [2, delta_max] at which a Gorenstein point exists.
inline std::vector<GorensteinPoint> gorenstein_oracle_scan(const BasePolytope& p, std::int64_t delta_max) {
  std::vector<GorensteinPoint> out;
  for (std::int64_t delta = 2; delta <= delta_max; ++delta)
    if (auto x = gorenstein_point_at(p, delta)) out.push_back({delta, std::move(*x)});
  return out;
}

/// Gorenstein test from the polytope alone: hull facets of the spanning-tree
/// vectors, then a search for a distance-one point in each dilation.
inline std::optional<GorensteinPoint> gorenstein_oracle(const Multigraph& g, std::int64_t delta_max) {
  const BasePolytope p = oracle_polytope(g);
  for (std::int64_t delta = 2; delta <= delta_max; ++delta)
    if (auto x = gorenstein_point_at(p, delta)) return GorensteinPoint{delta, std::move(*x)};
  return std::nullopt;
}

inline std::optional<GorensteinPoint> gorenstein_oracle(const Multigraph& g) {
  return gorenstein_oracle(g, default_delta_max(g));
}

/// True when P itself has no lattice point strictly inside every facet, so
/// no Gorenstein point can exist at dilation 1.
inline bool never_delta_one(const BasePolytope& p) {
  bool found = false;
  detail::dilation_search(p, 1, detail::DistanceRule::at_least_one).run([&](const LatticePoint&) {
    found = true;
    return false;
  });
  return !found;
}

inline bool never_delta_one(const Multigraph& g) {
  if (g.edge_count() < 2) throw precondition_error("need at least two edges");
  return never_delta_one(build_polytope(g));
}

}  // namespace gorenstein
