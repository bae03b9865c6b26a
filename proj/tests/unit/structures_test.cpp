// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "conmat/common/error.hpp"
#include "conmat/structures/families.hpp"
#include "conmat/structures/graph.hpp"
#include "conmat/structures/structure.hpp"
#include "test_support.hpp"

namespace conmat {
namespace {

TEST(Graph, TriangleIsValid) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(Graph, RejectsOutOfRangeEdge) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(0, 5), Error);
}

TEST(Graph, LabelledDirectedPath) {
  Graph g(2, /*directed=*/true);
  g.add_edge(0, 1);
  g.set_label("start", 0);
  g.set_label("end", 1);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 0));
  EXPECT_EQ(g.label("end"), 1);
}

TEST(Graph, TextFormatRoundTrips) {
  for (const auto& g : testing::graphs_up_to(4)) {
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
  Graph d = generate(parse_family_id("DirPath(4)"));
  EXPECT_EQ(parse_graph(format_graph(d)), d);
}

TEST(Graph, ParseErrorsAreReported) {
  EXPECT_THROW(parse_graph("3 1\n0 7\n"), Error);
  EXPECT_THROW(parse_graph("x"), Error);
}

TEST(Families, DirPath) {
  const Graph g = generate(parse_family_id("DirPath(3)"));
  EXPECT_EQ(g.order(), 3);
  EXPECT_TRUE(g.directed());
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.label("start"), 0);
  EXPECT_EQ(g.label("end"), 2);
}

TEST(Families, MatchingGraph) {
  const Graph g = generate(FamilyId{FamilyKind::kMatchingGraph, 2, 0});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 2u);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 1);
}

TEST(Families, NamesRoundTrip) {
  for (const std::string text : {"Clique(4)", "Path(1)", "Asym(7)", "CompleteBipartite(2,3)", "OneEdge(4)"}) {
    EXPECT_EQ(to_string(parse_family_id(text)), text);
  }
  EXPECT_THROW(parse_family_id("Nope(3)"), Error);
  EXPECT_THROW(generate(FamilyId{FamilyKind::kAsym, 5, 0}), Error);
}

TEST(Automorphisms, SmallExamples) {
  EXPECT_EQ(automorphism_count(generate(parse_family_id("Clique(3)")).unlabeled()), 6);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  EXPECT_EQ(automorphism_count(path), 2);
}

TEST(Automorphisms, AsymmetricFamilyHasTrivialGroup) {
  for (int n = 6; n <= 8; ++n) {
    const Graph g = generate(FamilyId{FamilyKind::kAsym, n, 0}).unlabeled();
    EXPECT_EQ(g.order(), n);
    EXPECT_EQ(testing::brute_automorphisms(g), 1) << n;
    EXPECT_EQ(automorphism_count(g), 1) << n;
  }
}

TEST(Automorphisms, MatchesPermutationOracle) {
  for (const auto& g : testing::graphs_up_to(5)) {
    ASSERT_EQ(automorphism_count(g), testing::brute_automorphisms(g)) << format_graph(g);
  }
  for (const auto& g : testing::random_graphs(7, 40, 0.4, 11)) {
    ASSERT_EQ(automorphism_count(g), testing::brute_automorphisms(g)) << format_graph(g);
  }
  EXPECT_THROW(automorphism_count(Graph(13)), BoundExceeded);
}

TEST(Isomorphism, RelabelledCopies) {
  for (const auto& g : testing::random_graphs(6, 20, 0.5, 3)) {
    Graph r(6);
    for (const auto& [u, v] : g.edges()) r.add_edge(5 - u, 5 - v);
    EXPECT_TRUE(isomorphic(g, r));
  }
  EXPECT_FALSE(isomorphic(generate(parse_family_id("Path(4)")).unlabeled(),
                          generate(parse_family_id("Star(3)")).unlabeled()));
}

TEST(Structures, IncidenceEncoding) {
  Graph k2(2);
  k2.add_edge(0, 1);
  const Structure s = to_incidence(k2);
  EXPECT_EQ(s.size(), 3);
  const auto v = *s.vocabulary().relation_index("V");
  const auto e = *s.vocabulary().relation_index("E");
  const auto inc = *s.vocabulary().relation_index("R_inc");
  EXPECT_EQ(s.tuples(v).size(), 2u);
  EXPECT_EQ(s.tuples(e).size(), 1u);
  EXPECT_EQ(s.tuples(inc).size(), 2u);

  const Structure edgeless = to_incidence(Graph(3));
  EXPECT_EQ(edgeless.size(), 3);
  EXPECT_EQ(edgeless.tuples(*edgeless.vocabulary().relation_index("R_inc")).size(), 0u);

  const Structure tri = to_incidence(generate(parse_family_id("Clique(3)")));
  EXPECT_EQ(tri.size(), 6);
  EXPECT_EQ(tri.tuples(*tri.vocabulary().relation_index("R_inc")).size(), 6u);
}

TEST(Structures, GraphConversionRoundTrips) {
  for (const auto& g : testing::graphs_up_to(4)) {
    EXPECT_EQ(graph_from_structure(to_structure(g), false), g);
  }
}

TEST(Structures, MakeStructureValidatesArity) {
  const Vocabulary vocab({{"E", 2}}, {}, false);
  EXPECT_THROW(make_structure(vocab, 2, {{"E", {{0}}}}), Error);
  EXPECT_THROW(make_structure(vocab, 2, {{"E", {{0, 3}}}}), Error);
  const Structure s = make_structure(vocab, 2, {{"E", {{0, 1}}}});
  EXPECT_TRUE(s.holds(0, Tuple{0, 1}));
  EXPECT_FALSE(s.holds(0, Tuple{1, 0}));
}

}  // namespace
}  // namespace conmat
