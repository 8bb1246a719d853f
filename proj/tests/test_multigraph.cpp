#include <random>

#include <gtest/gtest.h>

#include "gorenstein/canonical.hpp"
#include "gorenstein/connectivity.hpp"
#include "gorenstein/multigraph.hpp"
#include "gorenstein/spanning_trees.hpp"
#include "oracles.hpp"

using namespace gorenstein;

TEST(Multigraph, RejectsLoopsAndBadVertices) {
  Multigraph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Multigraph, EdgeIdsSurviveDeletion) {
  Multigraph g = make_cycle(4);
  Multigraph h = delete_edge(g, EdgeId{1});
  EXPECT_FALSE(h.has_edge(EdgeId{1}));
  EXPECT_TRUE(h.has_edge(EdgeId{3}));
  EXPECT_EQ(h.edge(EdgeId{2}).u, 2u);
  // A later edge never reuses the deleted id.
  EXPECT_EQ(h.add_edge(0, 2).value, 4u);
  EXPECT_THROW(h.edge(EdgeId{1}), std::invalid_argument);
}

TEST(Multigraph, ContractionDropsParallelEdges) {
  Multigraph g(3);
  auto a = g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  auto c = contract_edge(g, a);
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.edge_count(), 2u);  // both 0-1 edges became loops
  EXPECT_EQ(c.vertex_map, (std::vector<Vertex>{0, 0, 1}));
  EXPECT_EQ(c.graph.multiplicity(0, 1), 2u);
}

TEST(Multigraph, ContractSubsetAndInduced) {
  Multigraph k4 = make_complete(4);
  auto c = contract_subset(k4, {0, 1, 2});
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.multiplicity(0, 1), 3u);
  Multigraph t = induced_subgraph(k4, {1, 2, 3});
  EXPECT_EQ(t.edge_count(), 3u);
  EXPECT_THROW(contract_subset(k4, {2, 1}), std::invalid_argument);
}

TEST(Multigraph, Families) {
  EXPECT_EQ(make_cycle(2).multiplicity(0, 1), 2u);
  EXPECT_EQ(make_complete(5).edge_count(), 10u);
  EXPECT_EQ(make_dipole(4).edge_count(), 4u);
  EXPECT_FALSE(make_dipole(2).is_simple());
  EXPECT_TRUE(make_cycle(5).is_simple());
}

TEST(EdgeList, RoundTrip) {
  Multigraph g = make_dipole(3);
  g = delete_edge(g, EdgeId{0});
  Multigraph h = parse_edge_list(to_edge_list(g));
  EXPECT_EQ(h.vertex_count(), 2u);
  EXPECT_EQ(h.multiplicity(0, 1), 2u);
  EXPECT_EQ(h.edge_ids(), (std::vector<EdgeId>{EdgeId{0}, EdgeId{1}}));
}

TEST(EdgeList, ErrorsCarryLineAndColumn) {
  try {
    parse_edge_list("3 2\n0 1\n1 1\n");
    FAIL() << "loop accepted";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_edge_list("3 1\n0 x\n");
    FAIL() << "letter accepted";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_edge_list("2 2\n0 1\n"), parse_error);
  EXPECT_THROW(parse_edge_list("2 1\n0 5\n"), parse_error);
  EXPECT_THROW(parse_edge_list("2 1\n1 0\n"), parse_error);
  EXPECT_THROW(parse_edge_list("2 1\n0 1 7\n"), parse_error);
}

TEST(EdgeList, DotOutput) {
  std::vector<std::string> labels{"a", "b"};
  auto dot = to_dot(make_cycle(2), labels);
  EXPECT_NE(dot.find("0 -- 1 [id=1, label=\"b\"]"), std::string::npos);
}

TEST(Connectivity, Conventions) {
  EXPECT_TRUE(is_two_connected(make_path(2)));  // K_2
  EXPECT_TRUE(is_two_connected(make_cycle(2)));
  EXPECT_FALSE(is_two_connected(Multigraph(1)));
  EXPECT_FALSE(is_two_connected(make_path(3)));
  EXPECT_EQ(blocks(Multigraph(1)).size(), 0u);
}

TEST(Connectivity, BowtieHasTwoBlocks) {
  auto g = oracle::graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto b = blocks(g);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], (VertexSubset{0, 1, 2}));
  EXPECT_EQ(b[1], (VertexSubset{2, 3, 4}));
  EXPECT_FALSE(is_two_connected(g));
}

TEST(Connectivity, AgreesWithVertexRemoval) {
  // Every multigraph on up to 4 vertices with multiplicities up to 2.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::size_t combos = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Multigraph g(n);
      std::size_t c = code;
      for (auto [a, b] : pairs) {
        for (std::size_t t = 0; t < c % 3; ++t) g.add_edge(a, b);
        c /= 3;
      }
      ASSERT_EQ(is_two_connected(g), oracle::two_connected(g)) << to_edge_list(g);
    }
  }
}

TEST(SpanningTrees, KnownCounts) {
  EXPECT_EQ(spanning_trees(make_complete(4)).size(), 16u);
  EXPECT_EQ(spanning_trees(make_cycle(6)).size(), 6u);
  EXPECT_EQ(spanning_trees(make_dipole(5)).size(), 5u);
  EXPECT_EQ(spanning_trees(make_path(4)).size(), 1u);
  EXPECT_THROW(spanning_trees(Multigraph(2)), precondition_error);
}

TEST(SpanningTrees, TreesAreForestsOfFullSize) {
  auto g = oracle::graph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
  auto trees = spanning_trees(g);
  EXPECT_EQ(Integer(trees.size()), oracle::matrix_tree_count(g));
  std::set<EdgeSet> distinct(trees.begin(), trees.end());
  EXPECT_EQ(distinct.size(), trees.size());
  for (const auto& t : trees) {
    ASSERT_EQ(t.size(), 3u);
    detail::DisjointSets d(4);
    for (EdgeId id : t) EXPECT_TRUE(d.unite(g.edge(id).u, g.edge(id).v));
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  std::vector<Multigraph> samples{make_complete(5), make_cycle(6),
                                  oracle::graph(5, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}})};
  for (const auto& g : samples) {
    const auto form = canonical_form(g);
    for (int k = 0; k < 20; ++k) {
      std::vector<Vertex> perm(g.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Multigraph h = relabel(g, perm);
      EXPECT_EQ(canonical_form(h), form);
      auto map = find_isomorphism(g, h);
      ASSERT_TRUE(map.has_value());
      for (const Edge& e : g.edges()) EXPECT_EQ(h.multiplicity((*map)[e.u], (*map)[e.v]), g.multiplicity(e.u, e.v));
    }
    EXPECT_EQ(canonical_form(form.to_graph()), form);
  }
}

TEST(Canonical, SeparatesExactlyTheIsomorphismClasses) {
  // All multigraphs on 4 vertices with multiplicities up to 2: equal forms
  // exactly when the brute-force minimum over all 24 labelings agrees.
  std::vector<Multigraph> all;
  std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (std::size_t code = 0; code < 729; code += 7) {
    Multigraph g(4);
    std::size_t c = code;
    for (auto [a, b] : pairs) {
      for (std::size_t t = 0; t < c % 3; ++t) g.add_edge(a, b);
      c /= 3;
    }
    all.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      ASSERT_EQ(canonical_form(all[i]) == canonical_form(all[j]),
                oracle::brute_canonical(all[i]) == oracle::brute_canonical(all[j]));
}

TEST(Canonical, StringForm) {
  EXPECT_EQ(canonical_form(make_cycle(3)).to_string(), "3:1,1,1");
  EXPECT_EQ(canonical_form(make_dipole(3)).to_string(), "2:3");
  EXPECT_FALSE(are_isomorphic(make_cycle(4), make_complete(4)));
}
