#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorenstein/base_polytope.hpp"
#include "gorenstein/census.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/gorenstein_check.hpp"
#include "gorenstein/multigraph.hpp"

namespace gorenstein {

// Insertion order is kept so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// Small integers as JSON numbers, anything wider as a decimal string.
inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json integers_json(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

inline Json graph_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id.value, e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

/// Accepts {"vertices": n, "edges": [[id, u, v], ...]} or an edge-list string.
inline Multigraph graph_from_json(const Json& j) {
  if (j.is_string()) return parse_edge_list(j.get<std::string>());
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph needs \"vertices\" and \"edges\"");
  Multigraph g(j.at("vertices").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) throw std::invalid_argument("edge must be [id, u, v] or [u, v]");
    if (e.size() == 2)
      g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
    else
      g.add_edge_with_id(EdgeId{e[0].get<std::uint32_t>()}, e[1].get<Vertex>(), e[2].get<Vertex>());
  }
  return g;
}

inline Json edge_ids_json(const std::vector<EdgeId>& ids) {
  Json a = Json::array();
  for (EdgeId id : ids) a.push_back(id.value);
  return a;
}

inline std::vector<EdgeId> edge_ids_from_json(const Json& j) {
  std::vector<EdgeId> out;
  for (const auto& x : j) out.push_back(EdgeId{x.get<std::uint32_t>()});
  return out;
}

/// {"edge id": weight, ...} in edge-id order.
inline Json weights_json(const WeightAssignment& w) {
  Json o = Json::object();
  for (const auto& [id, x] : w.weights) o[std::to_string(id.value)] = x;
  return o;
}

inline Json good_flats_json(const Multigraph& g) {
  Json a = Json::array();
  for (const auto& f : good_flats(g)) a.push_back(f.subset);
  return a;
}

/// Verdict of the weight criterion.
inline Json check_json(const Multigraph& g) {
  if (!is_two_connected(g)) return {{"gorenstein", false}, {"reason", "not 2-connected"}};
  auto v = is_gorenstein(g);
  if (!v) return {{"gorenstein", false}, {"reason", "no delta satisfies the spade equalities"}};
  return {{"gorenstein", true}, {"delta", v->delta}, {"weights", weights_json(v->weights)},
          {"good_flats", good_flats_json(g)}};
}

inline Json facet_json(const FacetInequality& f) {
  Json o{{"kind", to_string(f.kind)}};
  if (f.kind == FacetKind::nonnegativity) o["edge"] = f.edge.value;
  if (f.kind == FacetKind::good_flat) o["subset"] = f.subset;
  o["normal"] = integers_json(f.normal);
  o["offset"] = integer_json(f.offset);
  o["reduced"] = {{"coefficients", integers_json(f.reduced.coefficients)},
                  {"constant", integer_json(f.reduced.constant)},
                  {"divisor", integer_json(f.reduced.divisor)}};
  return o;
}

/// H-representation: normal . x <= offset on the hyperplane sum x = rank.
inline Json polytope_json(const BasePolytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets) facets.push_back(facet_json(f));
  return {{"ambient_dim", p.ambient_dim},
          {"dimension", p.dimension()},
          {"rank", p.rank},
          {"coordinates", edge_ids_json(p.coordinates)},
          {"vertex_count", p.vertices.size()},
          {"facets", std::move(facets)}};
}

inline Json trace_json(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json o{{"kind", to_string(s.kind)}};
    if (s.kind == StepKind::path_contract) {
      o["path"] = s.path;
    } else {
      o["left_edge"] = s.left_edge.value;
      o["right_edge"] = s.right_edge.value;
      o["flip"] = s.flip;
      o["partner"] = s.partner ? trace_json(*s.partner) : Json();
    }
    steps.push_back(std::move(o));
  }
  return {{"delta", t.delta}, {"seed", to_string(t.seed)}, {"steps", std::move(steps)}};
}

inline ConstructionTrace trace_from_json(const Json& j) {
  ConstructionTrace t;
  t.delta = j.at("delta").get<std::int64_t>();
  const auto seed = j.at("seed").get<std::string>();
  if (seed == "cycle")
    t.seed = SeedKind::cycle;
  else if (seed == "clique_k4")
    t.seed = SeedKind::clique_k4;
  else
    throw std::invalid_argument("unknown seed \"" + seed + "\"");
  for (const auto& s : j.at("steps")) {
    TraceStep step;
    const auto kind = s.at("kind").get<std::string>();
    if (kind == "path_contract") {
      step.kind = StepKind::path_contract;
      step.path = s.at("path").get<std::vector<Vertex>>();
    } else {
      if (kind == "path_glue")
        step.kind = StepKind::path_glue;
      else if (kind == "delta_glue")
        step.kind = StepKind::delta_glue;
      else
        throw std::invalid_argument("unknown step kind \"" + kind + "\"");
      step.left_edge = EdgeId{s.at("left_edge").get<std::uint32_t>()};
      step.right_edge = EdgeId{s.at("right_edge").get<std::uint32_t>()};
      step.flip = s.value("flip", false);
      step.partner = std::make_shared<const ConstructionTrace>(trace_from_json(s.at("partner")));
    }
    t.steps.push_back(std::move(step));
  }
  return t;
}

/// Gluing request: {"delta", "left", "left_class", "right", "right_class",
/// "flip"?, "mode"?}. Mode "delta" (default) uses the classes as given;
/// "path" and "delta_edge" take one-edge classes and check the weights.
inline Multigraph glue_from_json(const Json& j) {
  GluingSpec s;
  s.delta = j.at("delta").get<std::int64_t>();
  s.left = graph_from_json(j.at("left"));
  s.right = graph_from_json(j.at("right"));
  s.left_class = edge_ids_from_json(j.at("left_class"));
  s.right_class = edge_ids_from_json(j.at("right_class"));
  s.flip = j.value("flip", false);
  const auto mode = j.value("mode", std::string("delta"));
  if (mode == "delta") return delta_gluing(s);
  if (s.left_class.size() != 1 || s.right_class.size() != 1)
    throw precondition_error("mode \"" + mode + "\" glues along single edges");
  if (mode == "path") return path_gluing(s.left, s.left_class[0], s.right, s.right_class[0], s.delta, s.flip);
  if (mode == "delta_edge")
    return delta_edge_gluing(s.left, s.left_class[0], s.right, s.right_class[0], s.delta, s.flip);
  throw std::invalid_argument("unknown gluing mode \"" + mode + "\"");
}

inline Json bounds_json(const CensusBounds& b) {
  return {{"max_vertices", b.max_vertices}, {"max_edges", b.max_edges}, {"max_multiplicity", b.max_multiplicity}};
}

inline Json census_json(const CensusBounds& b, const std::vector<CensusRecord>& records) {
  Json gor = Json::array(), bad = Json::array();
  for (const auto& r : records) {
    if (r.delta) {
      Json o{{"canonical", r.canonical.to_string()}, {"delta", *r.delta}};
      o["trace"] = r.trace ? trace_json(*r.trace) : Json();
      gor.push_back(std::move(o));
    }
    if (!r.mismatch.empty()) bad.push_back({{"canonical", r.canonical.to_string()}, {"reason", r.mismatch}});
  }
  return {{"bounds", bounds_json(b)}, {"total", records.size()}, {"gorenstein", std::move(gor)},
          {"mismatches", std::move(bad)}};
}

inline Json equivalence_json(const EquivalenceReport& r) {
  Json gor = Json::array(), bad = Json::array(), weightless = Json::array();
  for (const auto& [f, d] : r.gorenstein) gor.push_back({{"canonical", f.to_string()}, {"delta", d}});
  for (const auto& f : r.weightless) weightless.push_back(f.to_string());
  for (const auto& m : r.mismatches)
    bad.push_back({{"canonical", m.canonical.to_string()},
                   {"delta", m.delta},
                   {"spade", m.spade},
                   {"heart", m.heart},
                   {"oracle", m.oracle},
                   {"reason", m.detail}});
  return {{"bounds", bounds_json(r.bounds)},
          {"total", r.total},
          {"skipped", r.skipped},
          {"pairs_checked", r.pairs_checked},
          {"gorenstein", std::move(gor)},
          {"without_weight_function", std::move(weightless)},
          {"mismatches", std::move(bad)}};
}

inline Json classification_json(const ClassificationReport& r) {
  Json gor = Json::array(), bad = Json::array();
  for (const auto& e : r.gorenstein)
    gor.push_back({{"canonical", e.canonical.to_string()}, {"delta", r.delta}, {"trace", trace_json(e.trace)}});
  for (const auto& m : r.mismatches)
    bad.push_back({{"canonical", m.canonical.to_string()}, {"spade", m.spade}, {"trace", m.trace}, {"reason", m.detail}});
  return {{"bounds", bounds_json(r.bounds)}, {"delta", r.delta}, {"total", r.total}, {"gorenstein", std::move(gor)},
          {"mismatches", std::move(bad)}};
}

inline Json duality_json(const DualityReport& r) {
  Json bad = Json::array();
  for (const auto& f : r.mismatches) bad.push_back(f.to_string());
  return {{"bounds", bounds_json(r.bounds)}, {"total", r.total}, {"checked", r.checked}, {"mismatches", std::move(bad)}};
}

}  // namespace gorenstein
