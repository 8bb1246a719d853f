#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gorenstein/connectivity.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

using EdgeSet = std::vector<EdgeId>;

namespace detail {

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const Multigraph& g) : g_(g), edges_(g.edges()) {}

  std::vector<EdgeSet> run() {
    DisjointSets sets(g_.vertex_count());
    EdgeSet chosen;
    recurse(0, sets, chosen);
    return std::move(trees_);
  }

 private:
  void recurse(std::size_t i, DisjointSets& sets, EdgeSet& chosen) {
    const std::size_t need = g_.vertex_count() - 1;
    if (chosen.size() == need) {
      trees_.push_back(chosen);
      return;
    }
    if (chosen.size() + (edges_.size() - i) < need) return;
    const Edge& e = edges_[i];
    if (sets.find(e.u) != sets.find(e.v)) {
      DisjointSets with = sets;
      with.unite(e.u, e.v);
      chosen.push_back(e.id);
      recurse(i + 1, with, chosen);
      chosen.pop_back();
    }
    recurse(i + 1, sets, chosen);
  }

  const Multigraph& g_;
  std::span<const Edge> edges_;
  std::vector<EdgeSet> trees_;
};

}  // namespace detail

/// All spanning trees as edge-id lists (each in graph edge order). Parallel
/// edges yield distinct trees.
inline std::vector<EdgeSet> spanning_trees(const Multigraph& g) {
  if (!is_connected(g)) throw precondition_error("spanning trees need a connected graph");
  return detail::TreeEnumerator(g).run();
}

}  // namespace gorenstein
