#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gorenstein/connectivity.hpp"
#include "gorenstein/multigraph.hpp"
#include "gorenstein/spanning_trees.hpp"

namespace gorenstein {

/// Vertex subset whose restriction and whose contraction are both
/// 2-connected. Indexes a facet of the second kind.
struct GoodFlat {
  VertexSubset subset;
  std::vector<EdgeId> induced_edges;

  friend bool operator==(const GoodFlat&, const GoodFlat&) = default;
};

using SubsetMask = std::uint32_t;

inline constexpr std::size_t max_subset_vertices = 20;

inline VertexSubset subset_from_mask(SubsetMask mask) {
  VertexSubset s;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) s.push_back(v);
  return s;
}

inline SubsetMask mask_from_subset(const VertexSubset& s) {
  SubsetMask m = 0;
  for (Vertex v : s) m |= SubsetMask{1} << v;
  return m;
}

/// Lazily memoised 2-connectivity of induced subgraphs and of contractions,
/// keyed by subset bitmask. One instance per graph and per thread.
class SubsetConnectivity {
 public:
  explicit SubsetConnectivity(const Multigraph& g) : g_(g) {
    if (g.vertex_count() > max_subset_vertices)
      throw precondition_error("subset enumeration limited to 20 vertices");
    const std::size_t size = std::size_t{1} << g.vertex_count();
    induced_.assign(size, unknown);
    contracted_.assign(size, unknown);
  }

  const Multigraph& graph() const noexcept { return g_; }
  SubsetMask full_mask() const noexcept { return (SubsetMask{1} << g_.vertex_count()) - 1; }

  bool induced_two_connected(SubsetMask s) {
    auto& slot = induced_[s];
    if (slot == unknown) slot = is_two_connected(induced_subgraph(g_, subset_from_mask(s))) ? yes : no;
    return slot == yes;
  }

  bool contraction_two_connected(SubsetMask s) {
    auto& slot = contracted_[s];
    if (slot == unknown) slot = is_two_connected(contract_subset(g_, subset_from_mask(s)).graph) ? yes : no;
    return slot == yes;
  }

 private:
  static constexpr std::int8_t unknown = -1, no = 0, yes = 1;
  const Multigraph& g_;
  std::vector<std::int8_t> induced_;
  std::vector<std::int8_t> contracted_;
};

/// Rank of an edge set in M(G): the size of a maximal forest inside it.
inline std::size_t rank(const Multigraph& g, const EdgeSet& f) {
  detail::DisjointSets sets(g.vertex_count());
  std::size_t r = 0;
  for (EdgeId id : f) {
    const Edge& e = g.edge(id);
    if (sets.unite(e.u, e.v)) ++r;
  }
  return r;
}

/// Matroid connectivity straight from the definition: every two edges lie on
/// a common circuit. Circuits are found by scanning all edge subsets, so this
/// is an oracle for small graphs only.
inline bool is_matroid_connected(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  if (m <= 1) return true;
  if (m > 22) throw precondition_error("circuit scan limited to 22 edges");
  auto edges = g.edges();
  detail::DisjointSets classes(m);
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    // A circuit is a connected edge set in which every touched vertex has degree 2.
    std::fill(deg.begin(), deg.end(), 0);
    detail::DisjointSets sets(g.vertex_count());
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) {
        ++deg[edges[i].u];
        ++deg[edges[i].v];
        sets.unite(edges[i].u, edges[i].v);
        if (first == m) first = i;
      }
    bool circuit = true;
    for (std::size_t v = 0; v < deg.size() && circuit; ++v)
      if (deg[v] != 0 && (deg[v] != 2 || sets.find(v) != sets.find(edges[first].u))) circuit = false;
    if (!circuit) continue;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) classes.unite(first, i);
  }
  for (std::size_t i = 1; i < m; ++i)
    if (classes.find(i) != classes.find(0)) return false;
  return true;
}

inline void require_two_connected(const Multigraph& g) {
  if (!is_two_connected(g)) throw precondition_error("graph is not 2-connected");
}

/// Edges whose deletion keeps the graph 2-connected.
inline EdgeSet deletable_edges(const Multigraph& g) {
  require_two_connected(g);
  EdgeSet out;
  for (const Edge& e : g.edges())
    if (is_two_connected(delete_edge(g, e.id))) out.push_back(e.id);
  return out;
}

inline std::vector<GoodFlat> good_flats(SubsetConnectivity& cache) {
  const Multigraph& g = cache.graph();
  require_two_connected(g);
  std::vector<GoodFlat> out;
  const SubsetMask full = cache.full_mask();
  for (SubsetMask s = 1; s < full; ++s) {
    if (std::popcount(s) < 2) continue;
    if (!cache.induced_two_connected(s) || !cache.contraction_two_connected(s)) continue;
    VertexSubset subset = subset_from_mask(s);
    auto induced = edges_within(g, subset);
    out.push_back({std::move(subset), std::move(induced)});
  }
  return out;
}

/// All proper subsets S, 2 <= |S| < |V|, with G|_S and G/E(S) 2-connected.
inline std::vector<GoodFlat> good_flats(const Multigraph& g) {
  SubsetConnectivity cache(g);
  return good_flats(cache);
}

inline std::vector<VertexSubset> two_connected_subsets(SubsetConnectivity& cache) {
  std::vector<VertexSubset> out;
  const SubsetMask full = cache.full_mask();
  for (SubsetMask s = 1; s <= full && s != 0; ++s)
    if (std::popcount(s) >= 2 && cache.induced_two_connected(s)) out.push_back(subset_from_mask(s));
  return out;
}

/// All S (including V) whose induced subgraph is 2-connected.
inline std::vector<VertexSubset> two_connected_subsets(const Multigraph& g) {
  SubsetConnectivity cache(g);
  return two_connected_subsets(cache);
}

}  // namespace gorenstein
