#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gorenstein {

using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSubset = std::vector<Vertex>;

/// Opaque edge identity. Ids are unique within a graph and survive deletion
/// of other edges.
struct EdgeId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

/// Undirected edge with `u < v`.
struct Edge {
  EdgeId id;
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Loop-free undirected multigraph with stable edge identities.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  static Multigraph from_pairs(std::size_t vertex_count,
                               std::span<const std::pair<Vertex, Vertex>> pairs) {
    Multigraph g(vertex_count);
    for (auto [a, b] : pairs) g.add_edge(a, b);
    return g;
  }

  EdgeId add_edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a >= vertex_count_ || b >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    EdgeId id{next_id_++};
    edges_.push_back(Edge{id, std::min(a, b), std::max(a, b)});
    return id;
  }

  /// Adds an edge with a caller-chosen id; the id must be fresh.
  void add_edge_with_id(EdgeId id, Vertex a, Vertex b) {
    if (has_edge(id)) throw std::invalid_argument("duplicate edge id");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (a >= vertex_count_ || b >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    edges_.push_back(Edge{id, std::min(a, b), std::max(a, b)});
    next_id_ = std::max(next_id_, id.value + 1);
  }

  /// Keeps future ids above `id`, so derived graphs never reuse a dropped id.
  void reserve_ids_below(EdgeId id) noexcept { next_id_ = std::max(next_id_, id.value); }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  EdgeId next_edge_id() const noexcept { return EdgeId{next_id_}; }

  bool has_edge(EdgeId id) const noexcept { return find(id) != nullptr; }

  const Edge& edge(EdgeId id) const {
    const Edge* e = find(id);
    if (e == nullptr)
      throw std::invalid_argument("unknown edge id " + std::to_string(id.value));
    return *e;
  }

  std::size_t edge_index(EdgeId id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].id == id) return i;
    throw std::invalid_argument("unknown edge id " + std::to_string(id.value));
  }

  std::size_t multiplicity(Vertex a, Vertex b) const noexcept {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [&](const Edge& e) { return e.u == a && e.v == b; }));
  }

  std::size_t degree(Vertex x) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [&](const Edge& e) { return e.u == x || e.v == x; }));
  }

  std::vector<EdgeId> edges_between(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
      if (e.u == a && e.v == b) out.push_back(e.id);
    return out;
  }

  std::vector<std::vector<std::size_t>> multiplicity_matrix() const {
    std::vector<std::vector<std::size_t>> m(vertex_count_, std::vector<std::size_t>(vertex_count_, 0));
    for (const Edge& e : edges_) {
      ++m[e.u][e.v];
      ++m[e.v][e.u];
    }
    return m;
  }

  bool is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (std::size_t j = i + 1; j < edges_.size(); ++j)
        if (edges_[i].u == edges_[j].u && edges_[i].v == edges_[j].v) return false;
    return true;
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back(e.id);
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  const Edge* find(EdgeId id) const noexcept {
    for (const Edge& e : edges_)
      if (e.id == id) return &e;
    return nullptr;
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::uint32_t next_id_ = 0;
};

/// Result of a contraction: the new graph plus the old-to-new vertex map.
struct Contraction {
  Multigraph graph;
  std::vector<Vertex> vertex_map;
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  std::vector<std::size_t> parent;
};

inline void check_subset(const Multigraph& g, const VertexSubset& s) {
  if (s.empty()) throw precondition_error("vertex subset must be nonempty");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("vertex subset must be sorted and unique");
  }
}

// Merges the classes of `sets` and renumbers densely in order of the
// smallest original vertex of each class. Edges that become loops vanish.
inline Contraction quotient(const Multigraph& g, DisjointSets& sets) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> root_to_new(n, n);
  std::vector<Vertex> map(n);
  std::size_t next = 0;
  for (Vertex x = 0; x < n; ++x) {
    std::size_t r = sets.find(x);
    if (root_to_new[r] == n) root_to_new[r] = next++;
    map[x] = root_to_new[r];
  }
  Multigraph out(next);
  for (const Edge& e : g.edges()) {
    Vertex a = map[e.u], b = map[e.v];
    if (a != b) out.add_edge_with_id(e.id, a, b);
  }
  out.reserve_ids_below(g.next_edge_id());
  return {std::move(out), std::move(map)};
}

}  // namespace detail

/// Returns a copy of `g` without edge `id`.
inline Multigraph delete_edge(const Multigraph& g, EdgeId id) {
  if (!g.has_edge(id)) throw std::invalid_argument("unknown edge id " + std::to_string(id.value));
  Multigraph out(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.id != id) out.add_edge_with_id(e.id, e.u, e.v);
  out.reserve_ids_below(g.next_edge_id());
  return out;
}

/// Identifies the endpoints of `id`. Edges parallel to it become loops and
/// are dropped; the result is renumbered densely.
inline Contraction contract_edge(const Multigraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  detail::DisjointSets sets(g.vertex_count());
  sets.unite(e.u, e.v);
  return detail::quotient(g, sets);
}

/// Contracts every edge with both endpoints in `s`.
inline Contraction contract_subset(const Multigraph& g, const VertexSubset& s) {
  detail::check_subset(g, s);
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex x : s) inside[x] = true;
  detail::DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges())
    if (inside[e.u] && inside[e.v]) sets.unite(e.u, e.v);
  return detail::quotient(g, sets);
}

/// Restriction of `g` to `s`; vertex i of the result is s[i].
inline Multigraph induced_subgraph(const Multigraph& g, const VertexSubset& s) {
  detail::check_subset(g, s);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> pos(n, n);
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = i;
  Multigraph out(s.size());
  for (const Edge& e : g.edges())
    if (pos[e.u] != n && pos[e.v] != n) out.add_edge_with_id(e.id, pos[e.u], pos[e.v]);
  out.reserve_ids_below(g.next_edge_id());
  return out;
}

/// Ids of edges with both endpoints in `s`, in graph order.
inline std::vector<EdgeId> edges_within(const Multigraph& g, const VertexSubset& s) {
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex x : s) inside[x] = true;
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges())
    if (inside[e.u] && inside[e.v]) out.push_back(e.id);
  return out;
}

/// Applies a vertex permutation: vertex x of `g` becomes perm[x].
inline Multigraph relabel(const Multigraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
  Multigraph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge_with_id(e.id, perm[e.u], perm[e.v]);
  out.reserve_ids_below(g.next_edge_id());
  return out;
}

// Standard families.

/// Cycle C_n; for n = 2 this is the 2-cycle (two parallel edges).
inline Multigraph make_cycle(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cycle needs at least 2 vertices");
  Multigraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph make_complete(std::size_t n) {
  Multigraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Two vertices joined by `n` parallel edges.
inline Multigraph make_dipole(std::size_t n) {
  Multigraph g(2);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(0, 1);
  return g;
}

inline Multigraph make_path(std::size_t n) {
  Multigraph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Edge-list text format: "n m" followed by m lines "u v" with 0 <= u < v < n.

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

class EdgeListReader {
 public:
  explicit EdgeListReader(std::string_view text) : text_(text) {}

  // Reads the next line holding exactly `count` unsigned integers.
  std::vector<std::size_t> numbers(std::size_t count, const char* what) {
    skip_blank_lines();
    if (pos_ >= text_.size())
      throw parse_error(line_, 1, std::string("unexpected end of input, expected ") + what);
    std::vector<std::size_t> out;
    columns_.clear();
    while (true) {
      skip_spaces();
      if (at_line_end()) break;
      std::size_t col = column();
      if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw parse_error(line_, col, std::string("expected a non-negative integer in ") + what);
      std::size_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (value > 1'000'000) throw parse_error(line_, col, "integer too large");
        ++pos_;
      }
      if (!at_line_end() && text_[pos_] != ' ' && text_[pos_] != '\t')
        throw parse_error(line_, column(), std::string("unexpected character in ") + what);
      if (out.size() == count)
        throw parse_error(line_, col, std::string("too many values in ") + what);
      out.push_back(value);
      columns_.push_back(col);
    }
    if (out.size() != count)
      throw parse_error(line_, column(), std::string("too few values in ") + what);
    finish_line();
    return out;
  }

  std::size_t last_line() const noexcept { return line_ - 1; }
  std::size_t value_column(std::size_t i) const { return columns_[i]; }

  void expect_end() {
    skip_blank_lines();
    if (pos_ < text_.size()) throw parse_error(line_, column(), "trailing content after edge list");
  }

 private:
  bool at_line_end() const { return pos_ >= text_.size() || text_[pos_] == '\n' || text_[pos_] == '\r'; }
  std::size_t column() const { return pos_ - line_start_ + 1; }

  void skip_spaces() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  void finish_line() {
    if (pos_ < text_.size() && text_[pos_] == '\r') ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
    ++line_;
    line_start_ = pos_;
  }

  void skip_blank_lines() {
    while (pos_ < text_.size()) {
      std::size_t p = pos_;
      while (p < text_.size() && (text_[p] == ' ' || text_[p] == '\t')) ++p;
      if (p < text_.size() && text_[p] != '\n' && text_[p] != '\r') return;
      pos_ = p;
      if (pos_ >= text_.size()) return;
      finish_line();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::vector<std::size_t> columns_;
};

}  // namespace detail

/// Parses the edge-list format. Edge ids are assigned 0..m-1 in line order.
inline Multigraph parse_edge_list(std::string_view text) {
  detail::EdgeListReader reader(text);
  auto header = reader.numbers(2, "header \"n m\"");
  const std::size_t n = header[0], m = header[1];
  Multigraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    auto uv = reader.numbers(2, "edge line \"u v\"");
    const std::size_t line = reader.last_line();
    if (uv[0] >= n) throw parse_error(line, reader.value_column(0), "vertex out of range");
    if (uv[1] >= n) throw parse_error(line, reader.value_column(1), "vertex out of range");
    if (uv[0] == uv[1]) throw parse_error(line, reader.value_column(1), "loops are not allowed");
    if (uv[0] > uv[1]) throw parse_error(line, reader.value_column(0), "expected u < v");
    g.add_edge(uv[0], uv[1]);
  }
  reader.expect_end();
  return g;
}

inline std::string to_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Graphviz text; `labels`, when nonempty, is indexed like g.edges().
inline std::string to_dot(const Multigraph& g, std::span<const std::string> labels = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x) out << "  " << x << ";\n";
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  " << edges[i].u << " -- " << edges[i].v << " [id=" << edges[i].id.value;
    if (!labels.empty()) out << ", label=\"" << labels[i] << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gorenstein
