#include <gtest/gtest.h>

#include "gorenstein/census.hpp"
#include "gorenstein/constructions.hpp"
#include "gorenstein/json_io.hpp"
#include "oracles.hpp"

using namespace gorenstein;

namespace {

bool spade_at(const Multigraph& g, std::int64_t delta) {
  if (!is_two_connected(g)) return false;
  auto w = weight_function(g, delta);
  return w && check_spade(g, *w);
}

const Multigraph diamond = oracle::graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

// Four-cycle whose edge 0-1 is replaced by four parallel edges.
Multigraph quadrupled_cycle() {
  return oracle::graph(4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Two four-cycles sharing the edge 0-3 (id 3).
Multigraph twin_cycles() { return oracle::graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}, {4, 5}, {0, 5}}); }

}  // namespace

TEST(Gluing, TrianglesGiveTheDiamondAtThree) {
  auto c3 = make_cycle(3);
  auto g = delta_gluing({c3, {EdgeId{0}}, c3, {EdgeId{0}}, 3, false});
  EXPECT_TRUE(are_isomorphic(g, diamond));
  EXPECT_TRUE(are_isomorphic(delta_edge_gluing(c3, EdgeId{0}, c3, EdgeId{1}, 3, true), diamond));
  EXPECT_TRUE(spade_at(g, 3));
}

TEST(Gluing, TrianglesGiveTheFourCycleAtTwo) {
  auto c3 = make_cycle(3);
  EXPECT_TRUE(are_isomorphic(delta_gluing({c3, {EdgeId{0}}, c3, {EdgeId{0}}, 2, false}), make_cycle(4)));
  EXPECT_TRUE(are_isomorphic(delta_edge_gluing(c3, EdgeId{0}, c3, EdgeId{2}, 2), make_cycle(4)));
}

TEST(Gluing, CycleTwoIsNeutralAtTwo) {
  EXPECT_TRUE(are_isomorphic(path_gluing(make_cycle(2), EdgeId{0}, make_cycle(2), EdgeId{1}, 2), make_cycle(2)));
  auto k4 = make_complete(4);
  for (const Edge& e : k4.edges()) {
    auto g = path_gluing(k4, e.id, make_cycle(2), EdgeId{0}, 2);
    EXPECT_TRUE(are_isomorphic(g, k4));
    EXPECT_TRUE(spade_at(g, 2));
  }
}

TEST(Gluing, LeftIdsSurviveAndFreshIdsFollow) {
  auto k4 = make_complete(4);
  auto g = path_gluing(k4, EdgeId{5}, make_cycle(3), EdgeId{0}, 3);
  for (std::uint32_t i = 0; i < 5; ++i) EXPECT_EQ(g.edge(EdgeId{i}).u, k4.edge(EdgeId{i}).u);
  EXPECT_FALSE(g.has_edge(EdgeId{5}));
  EXPECT_TRUE(g.has_edge(EdgeId{6}));
  EXPECT_TRUE(g.has_edge(EdgeId{7}));
  EXPECT_EQ(g.vertex_count(), 5u);
}

TEST(Gluing, Preconditions) {
  auto c3 = make_cycle(3);
  auto k4 = make_complete(4);
  // w(F1) + w(F2) = 1 + 1 < 3.
  EXPECT_THROW(delta_gluing({k4, {EdgeId{0}}, k4, {EdgeId{0}}, 3, false}), precondition_error);
  // Weight-1 edge where delta - 1 is required.
  EXPECT_THROW(path_gluing(k4, EdgeId{0}, k4, EdgeId{1}, 3), precondition_error);
  EXPECT_THROW(delta_edge_gluing(k4, EdgeId{0}, c3, EdgeId{0}, 3), precondition_error);
  // Classes that are not parallel, empty, or on a graph that is not 2-connected.
  EXPECT_THROW(delta_gluing({c3, {EdgeId{0}, EdgeId{1}}, c3, {EdgeId{0}}, 3, false}), precondition_error);
  EXPECT_THROW(delta_gluing({c3, {}, c3, {EdgeId{0}}, 3, false}), precondition_error);
  EXPECT_THROW(delta_gluing({make_path(3), {EdgeId{0}}, c3, {EdgeId{0}}, 3, false}), precondition_error);
  // K_2 has no weight function.
  EXPECT_THROW(delta_gluing({make_path(2), {EdgeId{0}}, c3, {EdgeId{0}}, 3, false}), precondition_error);
}

TEST(Gluing, ZeroReplacementEdgesIsPathGluing) {
  auto k4 = make_complete(4), c4 = make_cycle(4);
  auto a = delta_gluing({k4, {EdgeId{2}}, c4, {EdgeId{1}}, 4, false});
  auto b = path_gluing(k4, EdgeId{2}, c4, EdgeId{1}, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_count(), 5u + 3u);
}

TEST(Gluing, FourGluingCounterexample) {
  auto g1 = quadrupled_cycle(), g2 = twin_cycles();
  EXPECT_FALSE(spade_at(g1, 4));
  EXPECT_FALSE(spade_at(g2, 4));
  auto g = delta_gluing({g1, {EdgeId{0}, EdgeId{1}, EdgeId{2}, EdgeId{3}}, g2, {EdgeId{3}}, 4, false});
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_TRUE(spade_at(g, 4));
  auto p = gorenstein_oracle(g);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->delta, 4);
}

TEST(Gluing, PreservesSpadeOnCensusPairs) {
  // Single-edge classes of small Gorenstein graphs at a shared delta.
  std::vector<std::pair<Multigraph, std::int64_t>> gor;
  for (const auto& form : enumerate_forms({4, 6, 3})) {
    Multigraph g = form.to_graph();
    if (auto v = is_gorenstein(g)) gor.emplace_back(g, v->delta);
  }
  std::size_t glued = 0;
  for (const auto& [g1, d1] : gor)
    for (const auto& [g2, d2] : gor) {
      if (d1 != d2) continue;
      for (const Edge& e1 : g1.edges())
        for (const Edge& e2 : g2.edges()) {
          const auto w1 = *edge_weight(g1, e1.id, d1), w2 = *edge_weight(g2, e2.id, d2);
          if (w1 + w2 < d1) continue;
          for (bool flip : {false, true}) {
            auto g = delta_gluing({g1, {e1.id}, g2, {e2.id}, d1, flip});
            ASSERT_TRUE(spade_at(g, d1)) << to_edge_list(g1) << to_edge_list(g2);
            ++glued;
          }
        }
    }
  EXPECT_GT(glued, 100u);
}

TEST(Gluing, SpadeOnGlueAndRightGivesSpadeOnLeft) {
  // G_2 = C_delta glued at a weight-1 edge of G_1: whenever the result
  // satisfies spade, so does G_1. The one exception is G_1 = C_2 at
  // delta > 2, where the surviving edge has weight 1 in C_2 (C_2 minus an
  // edge is K_2) but delta - 1 in the result C_delta.
  std::set<std::pair<std::string, std::int64_t>> failures, expected;
  for (const auto& form : enumerate_forms({5, 8, 4})) {
    Multigraph g1 = form.to_graph();
    if (g1.edge_count() < 2) continue;
    for (std::int64_t d = 2; d <= 6; ++d)
      for (const Edge& e : g1.edges()) {
        auto w = edge_weight(g1, e.id, d);
        if (!w || *w != 1) continue;
        auto g = subdivide_edge(g1, e.id, d);
        if (spade_at(g, d) && !spade_at(g1, d)) failures.emplace(form.to_string(), d);
      }
  }
  for (std::int64_t d = 3; d <= 6; ++d) expected.emplace(canonical_form(make_cycle(2)).to_string(), d);
  EXPECT_EQ(failures, expected);
}

TEST(ContractPath, Examples) {
  for (std::int64_t d = 3; d <= 6; ++d) {
    std::vector<Vertex> path;
    for (Vertex i = 0; i < static_cast<Vertex>(d); ++i) path.push_back(i);
    EXPECT_TRUE(are_isomorphic(contract_path(make_cycle(static_cast<std::size_t>(d)), path, d), make_cycle(2)));
  }
  auto k4 = make_complete(4);
  EXPECT_THROW(contract_path(k4, {0, 1, 2}, 3), precondition_error);  // interior degree 3
  EXPECT_THROW(contract_path(make_cycle(5), {0, 1, 2}, 4), precondition_error);  // wrong length
  EXPECT_THROW(contract_path(make_cycle(5), {0, 2, 3}, 3), precondition_error);  // not a path
}

TEST(ContractPath, UndoesSubdivisionOnCensus) {
  for (const auto& form : enumerate_forms({5, 8, 4})) {
    Multigraph g = form.to_graph();
    auto v = is_gorenstein(g);
    if (!v) continue;
    const std::int64_t d = v->delta;
    for (const Edge& e : g.edges()) {
      if (v->weights[e.id] != 1) continue;
      Multigraph s = subdivide_edge(g, e.id, d);
      ASSERT_EQ(s.vertex_count(), g.vertex_count() + static_cast<std::size_t>(d - 2));
      // The new vertices are appended; the path runs through them in order.
      std::vector<Vertex> path{e.u};
      for (Vertex x = g.vertex_count(); x < s.vertex_count(); ++x) path.push_back(x);
      path.push_back(e.v);
      if (d > 2 && s.multiplicity(path[0], path[1]) == 0) std::reverse(path.begin() + 1, path.end() - 1);
      ASSERT_TRUE(are_isomorphic(contract_path(s, path, d), g)) << form.to_string();
    }
  }
}

TEST(Simplify, Examples) {
  auto s = simplify(make_dipole(3), 3);
  EXPECT_TRUE(s.is_simple());
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.edge_count(), 6u);
  EXPECT_TRUE(spade_at(s, 3));
  EXPECT_EQ(simplify(make_complete(4), 2), make_complete(4));
  EXPECT_TRUE(are_isomorphic(simplify(make_cycle(2), 2), make_cycle(2)));
  EXPECT_THROW(simplify(make_dipole(3), 4), precondition_error);
}

TEST(Simplify, CensusGraphsBecomeSimple) {
  for (const auto& form : enumerate_forms({4, 7, 4})) {
    Multigraph g = form.to_graph();
    auto v = is_gorenstein(g);
    if (!v || v->delta == 2) continue;
    auto s = simplify(g, v->delta);
    EXPECT_TRUE(s.is_simple()) << form.to_string();
    EXPECT_TRUE(spade_at(s, v->delta)) << form.to_string();
  }
}

TEST(MultiGluing, Examples) {
  auto c3 = make_cycle(3);
  auto g = multi_gluing({c3, c3}, {EdgeId{0}, EdgeId{0}}, 3);
  EXPECT_TRUE(are_isomorphic(g, diamond));
  EXPECT_EQ(multi_gluing({make_complete(4)}, {EdgeId{0}}, 2), make_complete(4));
  auto c4 = make_cycle(4);
  auto h = multi_gluing({c4, c4, c4}, {EdgeId{0}, EdgeId{0}, EdgeId{0}}, 4);
  EXPECT_EQ(h.vertex_count(), 8u);
  EXPECT_EQ(h.edge_count(), 10u);
  EXPECT_TRUE(spade_at(h, 4));
  EXPECT_THROW(multi_gluing({c4, c4}, {EdgeId{0}, EdgeId{0}}, 4), precondition_error);
  EXPECT_THROW(multi_gluing({c4, c4, make_complete(4)}, {EdgeId{0}, EdgeId{0}, EdgeId{0}}, 4), precondition_error);
}

TEST(MultiGluing, EqualsEdgeGluingThenPathGluings) {
  for (std::int64_t d = 3; d <= 6; ++d) {
    auto c = make_cycle(static_cast<std::size_t>(d));
    std::vector<Multigraph> graphs(static_cast<std::size_t>(d - 1), c);
    std::vector<EdgeId> edges(graphs.size(), EdgeId{0});
    auto direct = multi_gluing(graphs, edges, d);
    auto g = delta_edge_gluing(c, EdgeId{0}, c, EdgeId{0}, d);
    for (std::int64_t k = 0; k < d - 3; ++k) {
      const Edge& first = g.edge(g.edge_ids().front());
      (void)first;
      // Consume one of the delta - 2 parallel replacement edges.
      EdgeId parallel{};
      for (const Edge& e : g.edges())
        if (g.multiplicity(e.u, e.v) > 1) parallel = e.id;
      g = path_gluing(g, parallel, c, EdgeId{0}, d);
    }
    EXPECT_TRUE(are_isomorphic(direct, g)) << "delta " << d;
  }
}

TEST(Decompose, Examples) {
  for (std::int64_t d = 2; d <= 6; ++d) {
    auto t = decompose(make_cycle(static_cast<std::size_t>(d)), d);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->seed, SeedKind::cycle);
    EXPECT_TRUE(t->steps.empty());
  }
  auto k4 = decompose(make_complete(4), 2);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->seed, SeedKind::clique_k4);
  EXPECT_TRUE(k4->steps.empty());
  EXPECT_FALSE(decompose(make_complete(4), 3).has_value());
  EXPECT_THROW(decompose(make_path(3), 3), precondition_error);
}

TEST(Decompose, DipoleStartsWithAnEdgeGluingOfTwoCycles) {
  for (std::int64_t n = 3; n <= 6; ++n) {
    auto g = make_dipole(static_cast<std::size_t>(n));
    auto t = decompose(g, n);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->seed, SeedKind::cycle);
    ASSERT_FALSE(t->steps.empty());
    EXPECT_EQ(t->steps.front().kind, StepKind::delta_glue);
    EXPECT_EQ(t->steps.front().partner->seed, SeedKind::cycle);
    EXPECT_EQ(canonical_form(replay(*t)), canonical_form(g));
    EXPECT_FALSE(decompose(g, n + 1).has_value());
  }
}

TEST(Decompose, DiamondIsOneEdgeGluing) {
  auto t = decompose(diamond, 3);
  ASSERT_TRUE(t.has_value());
  ASSERT_EQ(t->steps.size(), 1u);
  EXPECT_EQ(t->steps[0].kind, StepKind::delta_glue);
  EXPECT_EQ(t->size(), 1u);
  EXPECT_TRUE(are_isomorphic(replay(*t), diamond));
  EXPECT_FALSE(decompose(diamond, 2).has_value());
}

TEST(Decompose, TraceJsonRoundTrip) {
  auto g = delta_gluing({quadrupled_cycle(), {EdgeId{0}, EdgeId{1}, EdgeId{2}, EdgeId{3}}, twin_cycles(), {EdgeId{3}}, 4,
                         false});
  auto t = decompose(g, 4);
  ASSERT_TRUE(t.has_value());
  const Json j = trace_json(*t);
  const auto back = trace_from_json(Json::parse(j.dump()));
  EXPECT_EQ(trace_json(back), j);
  EXPECT_TRUE(are_isomorphic(replay(back), g));
}

TEST(Decompose, ReplayRejectsBrokenTraces) {
  ConstructionTrace t{3, SeedKind::cycle, {}};
  TraceStep s;
  s.kind = StepKind::path_glue;
  t.steps.push_back(s);
  EXPECT_THROW(replay(t), precondition_error);  // no partner
  t.steps[0].partner = std::make_shared<const ConstructionTrace>(ConstructionTrace{4, SeedKind::cycle, {}});
  EXPECT_THROW(replay(t), precondition_error);  // mixed deltas
}
