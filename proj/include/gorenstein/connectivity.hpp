#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

namespace detail {

struct Incidence {
  Vertex to;
  std::size_t edge;  // index into g.edges()
};

inline std::vector<std::vector<Incidence>> incidence_lists(const Multigraph& g) {
  std::vector<std::vector<Incidence>> adj(g.vertex_count());
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].push_back({edges[i].v, i});
    adj[edges[i].v].push_back({edges[i].u, i});
  }
  return adj;
}

// Hopcroft-Tarjan with an edge stack. Parallel edges are distinguished by
// edge index, so only the tree edge itself is skipped when looking back.
class BlockFinder {
 public:
  explicit BlockFinder(const Multigraph& g)
      : g_(g), adj_(incidence_lists(g)), disc_(g.vertex_count(), 0), low_(g.vertex_count(), 0) {}

  std::vector<VertexSubset> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s)
      if (disc_[s] == 0) visit(s, g_.edge_count());
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
    return std::move(blocks_);
  }

 private:
  void visit(Vertex x, std::size_t via) {
    disc_[x] = low_[x] = ++clock_;
    for (const Incidence& inc : adj_[x]) {
      if (inc.edge == via) continue;
      if (disc_[inc.to] == 0) {
        stack_.push_back(inc.edge);
        visit(inc.to, inc.edge);
        low_[x] = std::min(low_[x], low_[inc.to]);
        if (low_[inc.to] >= disc_[x]) pop_block(inc.edge);
      } else if (disc_[inc.to] < disc_[x]) {
        stack_.push_back(inc.edge);
        low_[x] = std::min(low_[x], disc_[inc.to]);
      }
    }
  }

  void pop_block(std::size_t until) {
    std::vector<bool> seen(g_.vertex_count(), false);
    VertexSubset block;
    auto edges = g_.edges();
    while (true) {
      std::size_t e = stack_.back();
      stack_.pop_back();
      for (Vertex y : {edges[e].u, edges[e].v})
        if (!seen[y]) {
          seen[y] = true;
          block.push_back(y);
        }
      if (e == until) break;
    }
    blocks_.push_back(std::move(block));
  }

  const Multigraph& g_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::size_t> disc_, low_;
  std::size_t clock_ = 0;
  std::vector<std::size_t> stack_;
  std::vector<VertexSubset> blocks_;
};

}  // namespace detail

/// Blocks (maximal 2-connected pieces) of `g`, sorted. Isolated vertices
/// belong to no block, so a single vertex has zero blocks.
inline std::vector<VertexSubset> blocks(const Multigraph& g) {
  return detail::BlockFinder(g).run();
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
/// Vertices flagged in `removed` are ignored.
inline std::vector<VertexSubset> connected_components(const Multigraph& g,
                                                      const std::vector<bool>& removed = {}) {
  const std::size_t n = g.vertex_count();
  auto adj = detail::incidence_lists(g);
  auto gone = [&](Vertex x) { return !removed.empty() && removed[x]; };
  std::vector<bool> seen(n, false);
  std::vector<VertexSubset> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || gone(s)) continue;
    VertexSubset comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& inc : adj[comp[i]])
        if (!seen[inc.to] && !gone(inc.to)) {
          seen[inc.to] = true;
          comp.push_back(inc.to);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Multigraph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

/// Connected, at least two vertices, no cut vertex. K_2 and the 2-cycle
/// qualify; a single vertex does not.
inline bool is_two_connected(const Multigraph& g) {
  if (g.vertex_count() < 2) return false;
  auto b = blocks(g);
  return b.size() == 1 && b.front().size() == g.vertex_count();
}

}  // namespace gorenstein
