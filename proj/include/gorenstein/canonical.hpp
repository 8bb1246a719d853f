#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gorenstein/multigraph.hpp"

namespace gorenstein {

/// Isomorphism-invariant multiplicity matrix. `upper` lists the entries
/// (i, j), i < j, column by column: (0,1), (0,2), (1,2), (0,3), ...
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> upper;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::uint32_t at(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    if (i > j) std::swap(i, j);
    return upper[j * (j - 1) / 2 + i];
  }

  /// "n:e01,e02,e12,..." in storage order.
  std::string to_string() const {
    std::string s = std::to_string(vertex_count) + ":";
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(upper[i]);
    }
    return s;
  }

  Multigraph to_graph() const {
    Multigraph g(vertex_count);
    for (std::size_t j = 1; j < vertex_count; ++j)
      for (std::size_t i = 0; i < j; ++i)
        for (std::uint32_t k = 0; k < at(i, j); ++k) g.add_edge(i, j);
    return g;
  }
};

/// Canonical form plus the labeling that produces it: vertex x of the input
/// sits at canonical position position[x].
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<Vertex> position;
};

namespace detail {

// Ordered partition search: refine to an equitable partition, branch on the
// first smallest non-singleton cell, keep the least matrix over all leaves.
// Every choice depends only on isomorphism-invariant data.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Multigraph& g) : n_(g.vertex_count()), mult_(g.multiplicity_matrix()) {}

  CanonicalLabeling run() {
    CanonicalLabeling out;
    out.form.vertex_count = n_;
    if (n_ == 0) return out;
    std::vector<std::vector<Vertex>> cells{std::vector<Vertex>(n_)};
    for (Vertex v = 0; v < n_; ++v) cells[0][v] = v;
    search(std::move(cells));
    out.form.upper = std::move(best_);
    out.position.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) out.position[best_order_[p]] = p;
    return out;
  }

 private:
  using Cells = std::vector<std::vector<Vertex>>;

  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> cell_of(n_);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(cells.size(), 0);
          for (Vertex w = 0; w < n_; ++w) sig[cell_of[w]] += mult_[v][w];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<Vertex> part;
            for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
      }
      if (next.size() != cells.size()) changed = true;
      cells = std::move(next);
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    for (Vertex v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<std::uint32_t> m;
    m.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) m.push_back(static_cast<std::uint32_t>(mult_[order[i]][order[j]]));
    if (!have_best_ || m < best_) {
      best_ = std::move(m);
      best_order_ = std::move(order);
      have_best_ = true;
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> mult_;
  std::vector<std::uint32_t> best_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

}  // namespace detail

/// Least multiplicity matrix over the leaves of an individualisation and
/// refinement search. No automorphism pruning, so the cost grows with the
/// size of the automorphism group.
inline CanonicalLabeling canonical_labeling(const Multigraph& g) {
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Multigraph& g) { return canonical_labeling(g).form; }

/// Vertex map a -> b realising an isomorphism, if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto la = canonical_labeling(a);
  auto lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<Vertex> at_position(b.vertex_count());
  for (Vertex y = 0; y < b.vertex_count(); ++y) at_position[lb.position[y]] = y;
  std::vector<Vertex> map(a.vertex_count());
  for (Vertex x = 0; x < a.vertex_count(); ++x) map[x] = at_position[la.position[x]];
  return map;
}

inline bool are_isomorphic(const Multigraph& a, const Multigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

}  // namespace gorenstein
