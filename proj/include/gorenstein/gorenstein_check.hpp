#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gorenstein/connectivity.hpp"
#include "gorenstein/graphic_matroid.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

/// Weight function at a fixed delta: every weight is 1 or delta - 1.
struct WeightAssignment {
  std::int64_t delta = 0;
  std::map<EdgeId, std::int64_t> weights;

  std::int64_t operator[](EdgeId id) const { return weights.at(id); }

  std::int64_t total(const std::vector<EdgeId>& ids) const {
    std::int64_t s = 0;
    for (EdgeId id : ids) s += weights.at(id);
    return s;
  }

  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// Weight of a single edge: 1 when deleting it keeps G 2-connected,
/// otherwise delta - 1 when contracting it does, otherwise none.
inline std::optional<std::int64_t> edge_weight(const Multigraph& g, EdgeId id, std::int64_t delta) {
  if (is_two_connected(delete_edge(g, id))) return 1;
  if (is_two_connected(contract_edge(g, id).graph)) return delta - 1;
  return std::nullopt;
}

inline std::optional<WeightAssignment> weight_function(const Multigraph& g, std::int64_t delta) {
  if (delta < 2) throw std::invalid_argument("delta must be at least 2");
  require_two_connected(g);
  WeightAssignment w{delta, {}};
  for (const Edge& e : g.edges()) {
    auto x = edge_weight(g, e.id, delta);
    if (!x) return std::nullopt;
    w.weights.emplace(e.id, *x);
  }
  return w;
}

inline bool check_spade(SubsetConnectivity& cache, const WeightAssignment& w) {
  const Multigraph& g = cache.graph();
  const auto delta = w.delta;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (w.total(g.edge_ids()) != delta * (n - 1)) return false;
  for (const GoodFlat& flat : good_flats(cache))
    if (w.total(flat.induced_edges) + 1 != delta * (static_cast<std::int64_t>(flat.subset.size()) - 1)) return false;
  return true;
}

/// w(E) = delta(|V| - 1), and w(E(S)) + 1 = delta(|S| - 1) on every good flat.
inline bool check_spade(const Multigraph& g, const WeightAssignment& w) {
  SubsetConnectivity cache(g);
  return check_spade(cache, w);
}

/// Number of blocks left after contracting E(S); zero for S = V.
inline std::size_t contracted_block_count(const Multigraph& g, const VertexSubset& s) {
  return blocks(contract_subset(g, s).graph).size();
}

inline bool check_heart(SubsetConnectivity& cache, const WeightAssignment& w) {
  const Multigraph& g = cache.graph();
  for (const VertexSubset& s : two_connected_subsets(cache)) {
    const auto k = static_cast<std::int64_t>(contracted_block_count(g, s));
    if (w.total(edges_within(g, s)) + k != w.delta * (static_cast<std::int64_t>(s.size()) - 1)) return false;
  }
  return true;
}

/// w(E(S)) + k(S) = delta(|S| - 1) on every 2-connected S, V included.
inline bool check_heart(const Multigraph& g, const WeightAssignment& w) {
  SubsetConnectivity cache(g);
  return check_heart(cache, w);
}

/// Delta = 2 form: every weight is 1, so only edge counts matter.
/// |E| = 2(|V| - 1) and |E(S)| + 1 = 2(|S| - 1) on every good flat.
inline bool check_spade_delta_two(const Multigraph& g) {
  require_two_connected(g);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (static_cast<std::int64_t>(g.edge_count()) != 2 * (n - 1)) return false;
  for (const GoodFlat& flat : good_flats(g))
    if (static_cast<std::int64_t>(flat.induced_edges.size()) + 1 !=
        2 * (static_cast<std::int64_t>(flat.subset.size()) - 1))
      return false;
  return true;
}

/// Upper end of the delta range scanned when the weight equation is degenerate.
inline std::int64_t delta_scan_bound(const Multigraph& g) {
  return static_cast<std::int64_t>(std::max<std::size_t>(g.edge_count(), 3));
}

/// Deltas allowed by w(E) = delta(|V| - 1), with A the deletable edges
/// (weight 1) and B the rest (weight delta - 1):
/// |A| - |B| = delta (|V| - 1 - |B|).
inline std::vector<std::int64_t> delta_candidates(const Multigraph& g) {
  require_two_connected(g);
  const auto a = static_cast<std::int64_t>(deletable_edges(g).size());
  const auto b = static_cast<std::int64_t>(g.edge_count()) - a;
  const auto r = static_cast<std::int64_t>(g.vertex_count()) - 1;
  std::vector<std::int64_t> out;
  if (b != r) {
    const std::int64_t num = a - b, den = r - b;
    if (num % den == 0 && num / den >= 2) out.push_back(num / den);
  } else if (a == b) {
    for (std::int64_t d = 2; d <= delta_scan_bound(g); ++d) out.push_back(d);
  }
  return out;
}

struct GorensteinVerdict {
  std::int64_t delta = 0;
  WeightAssignment weights;
};

/// Raised when the two combinatorial criteria disagree on the same input.
class criterion_mismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every delta candidate whose weight function passes the spade equalities.
inline std::vector<GorensteinVerdict> passing_deltas(const Multigraph& g) {
  std::vector<GorensteinVerdict> out;
  if (!is_two_connected(g)) return out;
  SubsetConnectivity cache(g);
  for (std::int64_t delta : delta_candidates(g)) {
    auto w = weight_function(g, delta);
    if (!w) continue;
    const bool spade = check_spade(cache, *w);
    if (spade != check_heart(cache, *w))
      throw criterion_mismatch("spade and heart criteria disagree at delta " + std::to_string(delta));
    if (spade) out.push_back({delta, std::move(*w)});
  }
  return out;
}

/// Gorenstein decision through the weight criterion; none when G is not
/// 2-connected or no candidate delta passes.
inline std::optional<GorensteinVerdict> is_gorenstein(const Multigraph& g) {
  auto all = passing_deltas(g);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

}  // namespace gorenstein
