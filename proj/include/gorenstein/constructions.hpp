#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorenstein/canonical.hpp"
#include "gorenstein/connectivity.hpp"
#include "gorenstein/gorenstein_check.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

/// Two graphs to be glued along parallel classes. The endpoints of each
/// class are taken in stored order (u < v); u1 meets u2 and v1 meets v2,
/// or the crossed pairing when `flip` is set.
struct GluingSpec {
  Multigraph left;
  std::vector<EdgeId> left_class;
  Multigraph right;
  std::vector<EdgeId> right_class;
  std::int64_t delta = 2;
  bool flip = false;
};

namespace detail {

inline std::pair<Vertex, Vertex> class_endpoints(const Multigraph& g, const std::vector<EdgeId>& cls,
                                                 const char* side) {
  if (cls.empty()) throw precondition_error(std::string(side) + " parallel class is empty");
  auto sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw precondition_error(std::string(side) + " parallel class repeats an edge");
  const Edge& first = g.edge(cls.front());
  for (EdgeId id : cls) {
    const Edge& e = g.edge(id);
    if (e.u != first.u || e.v != first.v)
      throw precondition_error(std::string(side) + " class edges are not parallel");
  }
  return {first.u, first.v};
}

inline std::int64_t class_weight(const Multigraph& g, const std::vector<EdgeId>& cls, std::int64_t delta,
                                 const char* side) {
  std::int64_t total = 0;
  for (EdgeId id : cls) {
    auto w = edge_weight(g, id, delta);
    if (!w) throw precondition_error(std::string(side) + " graph has no weight function on edge " +
                                     std::to_string(id.value));
    total += *w;
  }
  return total;
}

// Identifies the class endpoints and puts `count` new edges between them.
// Left ids survive; right edges, then the new edges, get fresh ids.
inline Multigraph glue(const GluingSpec& s, std::size_t count) {
  auto [u1, v1] = class_endpoints(s.left, s.left_class, "left");
  auto [u2, v2] = class_endpoints(s.right, s.right_class, "right");
  const std::size_t n1 = s.left.vertex_count(), n2 = s.right.vertex_count();
  std::vector<Vertex> map(n2);
  std::size_t next = n1;
  for (Vertex y = 0; y < n2; ++y) {
    if (y == u2)
      map[y] = s.flip ? v1 : u1;
    else if (y == v2)
      map[y] = s.flip ? u1 : v1;
    else
      map[y] = next++;
  }
  Multigraph out(next);
  for (const Edge& e : s.left.edges())
    if (std::find(s.left_class.begin(), s.left_class.end(), e.id) == s.left_class.end())
      out.add_edge_with_id(e.id, e.u, e.v);
  out.reserve_ids_below(s.left.next_edge_id());
  for (const Edge& e : s.right.edges())
    if (std::find(s.right_class.begin(), s.right_class.end(), e.id) == s.right_class.end())
      out.add_edge(map[e.u], map[e.v]);
  for (std::size_t i = 0; i < count; ++i) out.add_edge(u1, v1);
  return out;
}

}  // namespace detail

/// Glues along F1 and F2 and puts w(F1) + w(F2) - delta parallel edges
/// between the merged pair.
inline Multigraph delta_gluing(const GluingSpec& s) {
  if (s.delta < 2) throw precondition_error("delta must be at least 2");
  require_two_connected(s.left);
  require_two_connected(s.right);
  detail::class_endpoints(s.left, s.left_class, "left");
  detail::class_endpoints(s.right, s.right_class, "right");
  const auto w = detail::class_weight(s.left, s.left_class, s.delta, "left") +
                 detail::class_weight(s.right, s.right_class, s.delta, "right");
  if (w < s.delta) throw precondition_error("w(F1) + w(F2) is smaller than delta");
  Multigraph out = detail::glue(s, static_cast<std::size_t>(w - s.delta));
  if (!is_two_connected(out)) throw precondition_error("gluing result is not 2-connected");
  return out;
}

namespace detail {

inline void require_weight(const Multigraph& g, EdgeId e, std::int64_t delta, std::int64_t want,
                           const char* what) {
  require_two_connected(g);
  auto w = edge_weight(g, e, delta);
  if (!w || *w != want)
    throw precondition_error(std::string(what) + " must have weight " + std::to_string(want));
}

}  // namespace detail

/// Glue along e1 (weight 1) and e2 (weight delta - 1) and drop the glued edge.
inline Multigraph path_gluing(const Multigraph& g1, EdgeId e1, const Multigraph& g2, EdgeId e2, std::int64_t delta,
                              bool flip = false) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  detail::require_weight(g1, e1, delta, 1, "left gluing edge");
  detail::require_weight(g2, e2, delta, delta - 1, "right gluing edge");
  return delta_gluing({g1, {e1}, g2, {e2}, delta, flip});
}

/// Glue along two weight delta - 1 edges; the glued edge becomes delta - 2
/// parallel edges.
inline Multigraph delta_edge_gluing(const Multigraph& g1, EdgeId e1, const Multigraph& g2, EdgeId e2,
                                    std::int64_t delta, bool flip = false) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  detail::require_weight(g1, e1, delta, delta - 1, "left gluing edge");
  detail::require_weight(g2, e2, delta, delta - 1, "right gluing edge");
  return delta_gluing({g1, {e1}, g2, {e2}, delta, flip});
}

/// Path gluing with C_delta: e becomes a path of delta - 1 edges.
inline Multigraph subdivide_edge(const Multigraph& g, EdgeId e, std::int64_t delta) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  return path_gluing(g, e, make_cycle(static_cast<std::size_t>(delta)), EdgeId{0}, delta);
}

namespace detail {

struct PathContraction {
  Multigraph graph;
  std::vector<Vertex> vertex_map;  // old -> new; removed vertices map to the old vertex count
  EdgeId new_edge;
};

inline PathContraction contract_path_mapped(const Multigraph& g, const std::vector<Vertex>& path,
                                            std::int64_t delta) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  if (path.size() != static_cast<std::size_t>(delta))
    throw precondition_error("path must have delta - 1 edges");
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  for (Vertex x : path) {
    if (x >= n) throw precondition_error("path vertex out of range");
    if (seen[x]) throw precondition_error("path repeats a vertex");
    seen[x] = true;
  }
  std::vector<EdgeId> used;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto between = g.edges_between(path[i], path[i + 1]);
    if (between.empty()) throw precondition_error("consecutive path vertices are not adjacent");
    used.push_back(between.front());
  }
  std::vector<bool> removed(n, false);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (g.degree(path[i]) != 2) throw precondition_error("interior path vertex does not have degree 2");
    removed[path[i]] = true;
  }
  PathContraction out{Multigraph(0), std::vector<Vertex>(n, n), EdgeId{}};
  std::size_t next = 0;
  for (Vertex x = 0; x < n; ++x)
    if (!removed[x]) out.vertex_map[x] = next++;
  Multigraph h(next);
  for (const Edge& e : g.edges())
    if (std::find(used.begin(), used.end(), e.id) == used.end())
      h.add_edge_with_id(e.id, out.vertex_map[e.u], out.vertex_map[e.v]);
  h.reserve_ids_below(g.next_edge_id());
  out.new_edge = h.add_edge(out.vertex_map[path.front()], out.vertex_map[path.back()]);
  out.graph = std::move(h);
  return out;
}

}  // namespace detail

/// Replaces a path of delta - 1 edges through degree-2 vertices by one new
/// edge. Interior vertices are removed; the rest keep their relative order.
inline Multigraph contract_path(const Multigraph& g, const std::vector<Vertex>& path, std::int64_t delta) {
  return detail::contract_path_mapped(g, path, delta).graph;
}

/// Path gluing with C_delta on every edge that has a parallel partner.
inline Multigraph simplify(const Multigraph& g, std::int64_t delta) {
  auto w = weight_function(g, delta);
  if (!w || !check_spade(g, *w)) throw precondition_error("graph does not satisfy the spade equalities");
  std::vector<EdgeId> targets;
  for (const Edge& e : g.edges())
    if (g.multiplicity(e.u, e.v) > 1) targets.push_back(e.id);
  Multigraph out = g;
  for (EdgeId id : targets) out = subdivide_edge(out, id, delta);
  return out;
}

/// Disjoint union of delta - 1 graphs with the chosen edges merged into one.
/// The first graph keeps its labels and edge ids; the merged edge keeps the
/// id of edges[0].
inline Multigraph multi_gluing(const std::vector<Multigraph>& graphs, const std::vector<EdgeId>& edges,
                               std::int64_t delta) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  if (graphs.size() != static_cast<std::size_t>(delta - 1) || edges.size() != graphs.size())
    throw precondition_error("multi gluing needs delta - 1 graphs and edges");
  for (std::size_t i = 0; i < graphs.size(); ++i)
    detail::require_weight(graphs[i], edges[i], delta, delta - 1, "multi gluing edge");
  if (graphs.size() == 1) return graphs.front();
  const Edge& base = graphs[0].edge(edges[0]);
  std::size_t total = graphs[0].vertex_count();
  for (std::size_t i = 1; i < graphs.size(); ++i) total += graphs[i].vertex_count() - 2;
  Multigraph out(total);
  for (const Edge& e : graphs[0].edges()) out.add_edge_with_id(e.id, e.u, e.v);
  out.reserve_ids_below(graphs[0].next_edge_id());
  std::size_t next = graphs[0].vertex_count();
  for (std::size_t i = 1; i < graphs.size(); ++i) {
    const Multigraph& h = graphs[i];
    const Edge& glue = h.edge(edges[i]);
    std::vector<Vertex> map(h.vertex_count());
    for (Vertex y = 0; y < h.vertex_count(); ++y)
      map[y] = y == glue.u ? base.u : y == glue.v ? base.v : next++;
    for (const Edge& e : h.edges())
      if (e.id != edges[i]) out.add_edge(map[e.u], map[e.v]);
  }
  return out;
}

// Construction traces.

enum class SeedKind { cycle, clique_k4 };
enum class StepKind { path_glue, delta_glue, path_contract };

inline std::string to_string(SeedKind k) { return k == SeedKind::cycle ? "cycle" : "clique_k4"; }

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::path_glue:
      return "path_glue";
    case StepKind::delta_glue:
      return "delta_glue";
    case StepKind::path_contract:
      return "path_contract";
  }
  return "?";
}

struct ConstructionTrace;

/// One move applied to the current graph. Glue steps name an edge of the
/// current graph and an edge of the replayed partner; contraction steps
/// name a vertex path of the current graph.
struct TraceStep {
  StepKind kind = StepKind::path_glue;
  std::shared_ptr<const ConstructionTrace> partner;
  EdgeId left_edge{};
  EdgeId right_edge{};
  bool flip = false;
  std::vector<Vertex> path;
};

/// Seed (C_delta or K_4) and the steps that turn it into the target.
struct ConstructionTrace {
  std::int64_t delta = 2;
  SeedKind seed = SeedKind::cycle;
  std::vector<TraceStep> steps;

  /// Total number of steps, partners included.
  std::size_t size() const {
    std::size_t s = steps.size();
    for (const auto& st : steps)
      if (st.partner) s += st.partner->size();
    return s;
  }
};

inline Multigraph seed_graph(const ConstructionTrace& t) {
  if (t.seed == SeedKind::clique_k4) return make_complete(4);
  return make_cycle(static_cast<std::size_t>(t.delta));
}

inline Multigraph replay(const ConstructionTrace& t) {
  if (t.delta < 2) throw precondition_error("trace delta must be at least 2");
  Multigraph g = seed_graph(t);
  for (const TraceStep& s : t.steps) {
    switch (s.kind) {
      case StepKind::path_glue:
      case StepKind::delta_glue: {
        if (!s.partner) throw precondition_error("glue step without a partner");
        if (s.partner->delta != t.delta) throw precondition_error("partner trace uses a different delta");
        Multigraph h = replay(*s.partner);
        g = s.kind == StepKind::path_glue ? path_gluing(g, s.left_edge, h, s.right_edge, t.delta, s.flip)
                                          : delta_edge_gluing(g, s.left_edge, h, s.right_edge, t.delta, s.flip);
        break;
      }
      case StepKind::path_contract:
        g = contract_path(g, s.path, t.delta);
        break;
    }
  }
  return g;
}

namespace detail {

inline bool is_cycle_graph(const Multigraph& g, std::size_t length) {
  if (g.vertex_count() != length || g.edge_count() != length || !is_connected(g)) return false;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (g.degree(x) != 2) return false;
  return true;
}

inline bool is_k4(const Multigraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 6 || !g.is_simple()) return false;
  return true;
}

// A separated piece: the component vertices plus u and v, with every u-v
// edge removed and exactly one new u-v edge added.
struct Piece {
  Multigraph graph;
  Vertex u = 0, v = 0;
  EdgeId edge{};
};

inline Piece make_piece(const Multigraph& g, Vertex u, Vertex v, const std::vector<Vertex>& inner) {
  VertexSubset s = inner;
  s.push_back(u);
  s.push_back(v);
  std::sort(s.begin(), s.end());
  Multigraph h = induced_subgraph(g, s);
  Piece p;
  p.u = static_cast<Vertex>(std::lower_bound(s.begin(), s.end(), u) - s.begin());
  p.v = static_cast<Vertex>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
  for (EdgeId id : h.edges_between(p.u, p.v)) h = delete_edge(h, id);
  p.edge = h.add_edge(p.u, p.v);
  p.graph = std::move(h);
  return p;
}

// First edge between the images of a and b under `map`.
inline EdgeId mapped_edge(const Multigraph& target, const std::vector<Vertex>& map, Vertex a, Vertex b) {
  auto between = target.edges_between(map[a], map[b]);
  if (between.empty()) throw std::logic_error("isomorphism lost an edge");
  return between.front();
}

// Gluing pairs a1 with a2 when the stored orders agree, so the flip flag is
// the disagreement of the two orders.
inline bool pairing_flip(Vertex a1, Vertex b1, Vertex a2, Vertex b2) { return (a1 < b1) != (a2 < b2); }

inline std::vector<Vertex> isomorphism_or_throw(const Multigraph& a, const Multigraph& b) {
  auto m = find_isomorphism(a, b);
  if (!m) throw std::logic_error("replayed trace does not match its model");
  return *m;
}

class Decomposer {
 public:
  explicit Decomposer(std::int64_t delta) : delta_(delta) {}

  std::optional<ConstructionTrace> solve(const Multigraph& g) {
    auto key = canonical_form(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (!it->second) return std::nullopt;
      // Steps refer to the labels of the graph the trace was built for;
      // replay is label-independent, so only the trace is shared.
      return *it->second;
    }
    memo_[key] = std::nullopt;  // guards against cycles while searching
    auto result = search(g);
    memo_[key] = result;
    return result;
  }

 private:
  std::optional<ConstructionTrace> search(const Multigraph& g) {
    if (!is_two_connected(g)) return std::nullopt;
    if (is_cycle_graph(g, static_cast<std::size_t>(delta_))) return ConstructionTrace{delta_, SeedKind::cycle, {}};
    if (delta_ == 2 && is_k4(g)) return ConstructionTrace{delta_, SeedKind::clique_k4, {}};
    if (!g.is_simple()) return delta_ == 2 ? std::nullopt : undo_simplification(g);
    if (delta_ > 2) {
      if (auto t = undo_subdivision(g)) return t;
      if (auto t = undo_edge_gluing(g)) return t;
    }
    return undo_path_gluing(g);
  }

  // Non-simple at delta > 2: subdivide each edge with a parallel partner,
  // decompose the simple result, then contract the paths back.
  std::optional<ConstructionTrace> undo_simplification(const Multigraph& g) {
    Multigraph h = g;
    std::vector<std::vector<Vertex>> paths;
    std::vector<EdgeId> targets;
    for (const Edge& e : g.edges())
      if (g.multiplicity(e.u, e.v) > 1) targets.push_back(e.id);
    for (EdgeId id : targets) {
      const Edge e = h.edge(id);
      Multigraph next(h.vertex_count() + static_cast<std::size_t>(delta_ - 2));
      for (const Edge& f : h.edges())
        if (f.id != id) next.add_edge_with_id(f.id, f.u, f.v);
      next.reserve_ids_below(h.next_edge_id());
      std::vector<Vertex> path{e.u};
      for (std::int64_t k = 0; k < delta_ - 2; ++k) path.push_back(h.vertex_count() + static_cast<std::size_t>(k));
      path.push_back(e.v);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) next.add_edge(path[i], path[i + 1]);
      paths.push_back(std::move(path));
      h = std::move(next);
    }
    auto t = solve(h);
    if (!t) return std::nullopt;
    // Newest paths use the highest labels, so contracting them first keeps
    // the labels of the remaining paths intact.
    Multigraph model = h;
    Multigraph real = replay(*t);
    for (auto it = paths.rbegin(); it != paths.rend(); ++it) {
      auto map = isomorphism_or_throw(model, real);
      TraceStep step;
      step.kind = StepKind::path_contract;
      for (Vertex x : *it) step.path.push_back(map[x]);
      real = contract_path(real, step.path, delta_);
      model = contract_path(model, *it, delta_);
      t->steps.push_back(std::move(step));
    }
    return t;
  }

  // A chain of delta - 1 edges through degree-2 vertices with non-adjacent
  // ends came from a path gluing with C_delta.
  std::optional<ConstructionTrace> undo_subdivision(const Multigraph& g) {
    const std::size_t len = static_cast<std::size_t>(delta_ - 1);
    const auto adj = incidence_lists(g);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (const auto& first : adj[s]) {
        std::vector<Vertex> path{s, first.to};
        std::size_t came = first.edge;
        bool ok = true;
        while (path.size() <= len && ok) {
          Vertex x = path.back();
          if (g.degree(x) != 2 || x == s) {
            ok = false;
            break;
          }
          for (const auto& inc : adj[x])
            if (inc.edge != came) {
              path.push_back(inc.to);
              came = inc.edge;
              break;
            }
        }
        if (!ok || path.size() != len + 1) continue;
        const Vertex t = path.back();
        if (t <= s || g.multiplicity(s, t) > 0) continue;
        if (std::find(path.begin() + 1, path.end() - 1, t) != path.end() - 1) continue;
        auto c = contract_path_mapped(g, path, delta_);
        auto w = edge_weight(c.graph, c.new_edge, delta_);
        if (!w || *w != 1) continue;
        auto sub = solve(c.graph);
        if (!sub) continue;
        Multigraph real = replay(*sub);
        auto map = isomorphism_or_throw(c.graph, real);
        const Edge& f = c.graph.edge(c.new_edge);
        TraceStep step;
        step.kind = StepKind::path_glue;
        step.partner = cycle_trace();
        step.left_edge = mapped_edge(real, map, f.u, f.v);
        step.right_edge = EdgeId{0};
        sub->steps.push_back(std::move(step));
        return sub;
      }
    }
    return std::nullopt;
  }

  // An edge uv whose ends split G into delta - 1 pieces came from one
  // delta-edge gluing followed by path gluings onto the parallel edges.
  std::optional<ConstructionTrace> undo_edge_gluing(const Multigraph& g) {
    for (const Edge& e : g.edges()) {
      std::vector<bool> removed(g.vertex_count(), false);
      removed[e.u] = removed[e.v] = true;
      auto comps = connected_components(g, removed);
      if (comps.size() != static_cast<std::size_t>(delta_ - 1)) continue;
      std::vector<Piece> pieces;
      bool ok = true;
      for (const auto& c : comps) {
        Piece p = make_piece(g, e.u, e.v, c);
        auto w = is_two_connected(p.graph) ? edge_weight(p.graph, p.edge, delta_) : std::nullopt;
        if (!w || *w != delta_ - 1) {
          ok = false;
          break;
        }
        pieces.push_back(std::move(p));
      }
      if (!ok) continue;
      std::vector<ConstructionTrace> traces;
      for (const auto& p : pieces) {
        auto t = solve(p.graph);
        if (!t) {
          ok = false;
          break;
        }
        traces.push_back(std::move(*t));
      }
      if (!ok) continue;
      return compose_edge_gluing(pieces, traces);
    }
    return std::nullopt;
  }

  ConstructionTrace compose_edge_gluing(const std::vector<Piece>& pieces, std::vector<ConstructionTrace>& traces) {
    ConstructionTrace out = traces[0];
    Multigraph model = pieces[0].graph;
    Multigraph real = replay(out);
    const Vertex mu = pieces[0].u, mv = pieces[0].v;
    for (std::size_t i = 1; i < pieces.size(); ++i) {
      const Piece& p = pieces[i];
      auto partner = std::make_shared<const ConstructionTrace>(traces[i]);
      Multigraph partner_real = replay(*partner);
      auto map = isomorphism_or_throw(model, real);
      auto pmap = isomorphism_or_throw(p.graph, partner_real);
      TraceStep step;
      step.kind = i == 1 ? StepKind::delta_glue : StepKind::path_glue;
      step.partner = partner;
      step.left_edge = mapped_edge(real, map, mu, mv);
      step.right_edge = mapped_edge(partner_real, pmap, p.u, p.v);
      step.flip = pairing_flip(map[mu], map[mv], pmap[p.u], pmap[p.v]);
      const EdgeId model_edge = model.edges_between(mu, mv).front();
      const bool model_flip = pairing_flip(mu, mv, p.u, p.v);
      if (i == 1) {
        real = delta_edge_gluing(real, step.left_edge, partner_real, step.right_edge, delta_, step.flip);
        model = delta_edge_gluing(model, model_edge, p.graph, p.edge, delta_, model_flip);
      } else {
        real = path_gluing(real, step.left_edge, partner_real, step.right_edge, delta_, step.flip);
        model = path_gluing(model, model_edge, p.graph, p.edge, delta_, model_flip);
      }
      out.steps.push_back(std::move(step));
    }
    return out;
  }

  // A non-adjacent separating pair {u, v}: G is a path gluing of the two
  // sides, each completed with a new u-v edge (weight 1 on the left,
  // delta - 1 on the right).
  std::optional<ConstructionTrace> undo_path_gluing(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.multiplicity(u, v) > 0) continue;
        std::vector<bool> removed(n, false);
        removed[u] = removed[v] = true;
        auto comps = connected_components(g, removed);
        if (comps.size() < 2 || comps.size() > 20) continue;
        const std::uint32_t full = (1u << comps.size()) - 1;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
          std::vector<Vertex> a, b;
          for (std::size_t c = 0; c < comps.size(); ++c) {
            auto& side = (mask >> c) & 1u ? a : b;
            side.insert(side.end(), comps[c].begin(), comps[c].end());
          }
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          Piece left = make_piece(g, u, v, a);
          Piece right = make_piece(g, u, v, b);
          if (!is_two_connected(left.graph) || !is_two_connected(right.graph)) continue;
          auto wl = edge_weight(left.graph, left.edge, delta_);
          auto wr = edge_weight(right.graph, right.edge, delta_);
          if (!wl || *wl != 1 || !wr || *wr != delta_ - 1) continue;
          auto tl = solve(left.graph);
          if (!tl) continue;
          auto tr = solve(right.graph);
          if (!tr) continue;
          return compose_path_gluing(left, std::move(*tl), right, std::move(*tr));
        }
      }
    }
    return std::nullopt;
  }

  ConstructionTrace compose_path_gluing(const Piece& left, ConstructionTrace tl, const Piece& right,
                                        ConstructionTrace tr) {
    Multigraph real = replay(tl);
    auto partner = std::make_shared<const ConstructionTrace>(std::move(tr));
    Multigraph partner_real = replay(*partner);
    auto map = isomorphism_or_throw(left.graph, real);
    auto pmap = isomorphism_or_throw(right.graph, partner_real);
    TraceStep step;
    step.kind = StepKind::path_glue;
    step.partner = partner;
    step.left_edge = mapped_edge(real, map, left.u, left.v);
    step.right_edge = mapped_edge(partner_real, pmap, right.u, right.v);
    step.flip = pairing_flip(map[left.u], map[left.v], pmap[right.u], pmap[right.v]);
    tl.steps.push_back(std::move(step));
    return tl;
  }

  std::shared_ptr<const ConstructionTrace> cycle_trace() {
    if (!cycle_) cycle_ = std::make_shared<const ConstructionTrace>(ConstructionTrace{delta_, SeedKind::cycle, {}});
    return cycle_;
  }

  std::int64_t delta_;
  std::map<CanonicalForm, std::optional<ConstructionTrace>> memo_;
  std::shared_ptr<const ConstructionTrace> cycle_;
};

}  // namespace detail

/// Searches inverse construction moves back to a seed: C_delta, or K_4 at
/// delta = 2. Absent when no sequence of moves reaches a seed.
inline std::optional<ConstructionTrace> decompose(const Multigraph& g, std::int64_t delta) {
  if (delta < 2) throw precondition_error("delta must be at least 2");
  require_two_connected(g);
  return detail::Decomposer(delta).solve(g);
}

}  // namespace gorenstein
