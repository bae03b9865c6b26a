// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>

#include "conmat/common/error.hpp"
#include "conmat/gluing/ops.hpp"
#include "conmat/invariants/numeric.hpp"
#include "conmat/invariants/oracles.hpp"
#include "conmat/invariants/polynomials.hpp"
#include "conmat/invariants/registry.hpp"
#include "conmat/structures/families.hpp"
#include "test_support.hpp"

namespace conmat {
namespace {

Graph fam(const std::string& text) { return generate(parse_family_id(text)); }

// Graphs on at most 5 vertices plus random 6- and 7-vertex samples.
const std::vector<Graph>& sample() {
  static const std::vector<Graph> graphs = [] {
    auto out = testing::graphs_up_to(5);
    for (auto& g : testing::random_graphs(6, 60, 0.45, 6)) out.push_back(std::move(g));
    for (auto& g : testing::random_graphs(7, 40, 0.35, 7)) out.push_back(std::move(g));
    return out;
  }();
  return graphs;
}

// Graphs with few edges, for edge-coloring oracles.
const std::vector<Graph>& sparse_sample() {
  static const std::vector<Graph> graphs = [] {
    std::vector<Graph> out;
    for (auto& g : testing::graphs_up_to(5)) {
      if (g.edge_count() <= 7) out.push_back(std::move(g));
    }
    for (auto& g : testing::random_graphs(7, 20, 0.2, 17)) {
      if (g.edge_count() <= 9) out.push_back(std::move(g));
    }
    return out;
  }();
  return graphs;
}

void expect_agrees(const std::string& id, const std::vector<Graph>& graphs,
                   const std::function<Value(const Graph&)>& oracle) {
  for (const auto& g : graphs) {
    ASSERT_EQ(evaluate(id, g), oracle(g)) << id << " on " << format_graph(g);
  }
}

std::vector<int> component_sizes(const Graph& c) {
  std::vector<int> seen(c.order(), 0), sizes;
  for (int s = 0; s < c.order(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++size;
      for (int w : c.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

bool max_component_at_most(const Graph& c, int t) {
  for (int s : component_sizes(c)) {
    if (s > t) return false;
  }
  return true;
}

TEST(Polynomials, ChromaticOfTriangle) {
  const Polynomial x = Polynomial::x();
  EXPECT_EQ(chromatic_polynomial(fam("Clique(3)")), x * (x - 1) * (x - 2));
  EXPECT_EQ(chromatic_polynomial(Graph(0)), Polynomial(1));
}

TEST(Polynomials, ChromaticMatchesOracleCounts) {
  for (const auto& g : sample()) {
    const Polynomial p = chromatic_polynomial(g);
    for (int k = 0; k <= 3; ++k) {
      ASSERT_EQ(p.evaluate(Rational(k)), Rational(oracle::proper_colorings(g, k))) << format_graph(g);
    }
  }
}

TEST(Polynomials, MatchingMatchesOracle) {
  for (const auto& g : sample()) ASSERT_EQ(matching_polynomial(g), oracle::matching_polynomial(g)) << format_graph(g);
}

TEST(Polynomials, MatchingProfileExamples) {
  const Polynomial x = Polynomial::x();
  const auto k2 = matching_profile(fam("Path(2)"), 0);
  EXPECT_EQ(k2.plus, x);
  EXPECT_EQ(k2.minus, Polynomial(1));
  EXPECT_EQ(k2.total, 1 + x);
  const auto k2_other = matching_profile(fam("Path(2)"), 1);
  EXPECT_EQ(k2_other.plus, x);
  const auto p3 = matching_profile(fam("Path(3)"), 1);
  EXPECT_EQ(p3.plus, 2 * x);
  EXPECT_EQ(p3.minus, Polynomial(1));
  EXPECT_EQ(p3.total, 1 + 2 * x);
}

TEST(Polynomials, OneSumBilinearIdentity) {
  const std::vector<std::string> family = {"Path(2)", "Path(3)", "Clique(3)", "Star(2)", "Clique(4)", "Star(3)"};
  for (const auto& a : family) {
    for (const auto& b : family) {
      const Graph g = fam(a), h = fam(b);
      const auto pg = matching_profile(g, *g.label("l1"));
      const auto ph = matching_profile(h, *h.label("l1"));
      EXPECT_EQ(matching_polynomial(k_sum(g, h, 1)), pg.plus * ph.minus + pg.minus * ph.plus + pg.minus * ph.minus)
          << a << " " << b;
    }
  }
}

TEST(Registry, CountingInvariantsMatchOracles) {
  expect_agrees("spanning_trees", sample(), [](const Graph& g) { return Value(oracle::spanning_trees(g)); });
  expect_agrees("cycles", sample(), [](const Graph& g) { return Value(oracle::cycles(g)); });
  expect_agrees("chromatic@3", sample(), [](const Graph& g) { return Value(oracle::proper_colorings(g, 3)); });
  expect_agrees("proper@3", sample(), [](const Graph& g) { return Value(oracle::proper_colorings(g, 3)); });
  expect_agrees("treewidth", sample(), [](const Graph& g) { return Value(oracle::treewidth(g)); });
}

TEST(Registry, PropertiesMatchOracles) {
  expect_agrees("hamiltonian", sample(), [](const Graph& g) { return Value(oracle::hamiltonian(g)); });
  expect_agrees("perfect_matching", sample(), [](const Graph& g) { return Value(oracle::perfect_matching(g)); });
  expect_agrees("well_covered", sample(), [](const Graph& g) { return Value(oracle::well_covered(g)); });
  expect_agrees("chordal", sample(), [](const Graph& g) { return Value(oracle::chordal(g)); });
  expect_agrees("interval", sample(), [](const Graph& g) { return Value(oracle::interval(g)); });
  for (int d = 2; d <= 3; ++d) {
    expect_agrees("spanning_maxdeg_le@" + std::to_string(d), sample(),
                  [d](const Graph& g) { return Value(oracle::spanning_tree_max_degree(g, d)); });
  }
  for (int l = 1; l <= 3; ++l) {
    expect_agrees("kconnected@" + std::to_string(l), sample(), [l](const Graph& g) {
      return Value(oracle::vertex_connectivity(g) >= l && g.order() > l);
    });
  }
  std::vector<Graph> small;
  for (const auto& g : sample()) {
    if (g.order() <= 6) small.push_back(g);
  }
  expect_agrees("planar", small, [](const Graph& g) { return Value(oracle::planar_small(g)); });
}

TEST(Registry, NonPlanarWitnesses) {
  EXPECT_FALSE(evaluate("planar", fam("Clique(5)")).as_bool());
  EXPECT_FALSE(evaluate("planar", fam("CompleteBipartite(3,3)")).as_bool());
  EXPECT_TRUE(evaluate("planar", fam("Clique(4)")).as_bool());
  EXPECT_TRUE(evaluate("planar", generate(FamilyId{FamilyKind::kCompleteBipartite, 2, 9})).as_bool());
}

TEST(Registry, VertexColoringVariantsMatchBruteForce) {
  const int k = 3;
  expect_agrees("vacyclic@3", sample(), [](const Graph& g) { return Value(oracle::acyclic_colorings(g, 3)); });
  expect_agrees("harmonious@3", sample(), [](const Graph& g) { return Value(oracle::harmonious_colorings(g, 3)); });
  expect_agrees("mcc@2,3", sample(), [k](const Graph& g) {
    return Value(oracle::vertex_colorings(g, k, [](const Graph& c) { return max_component_at_most(c, 2); }));
  });
  expect_agrees("convex@3", sample(), [k](const Graph& g) {
    return Value(oracle::vertex_colorings(g, k, [](const Graph& c) { return component_sizes(c).size() <= 1; }));
  });
  expect_agrees("timproper@1,3", sample(), [k](const Graph& g) {
    return Value(oracle::vertex_colorings(g, k, [](const Graph& c) {
      for (int v = 0; v < c.order(); ++v) {
        if (c.degree(v) > 1) return false;
      }
      return true;
    }));
  });
  expect_agrees("p_coloring@forest,3", sample(), [k](const Graph& g) {
    return Value(oracle::vertex_colorings(g, k, [](const Graph& c) { return oracle::cycles(c) == 0; }));
  });
}

TEST(Registry, EdgeColoringVariantsMatchBruteForce) {
  expect_agrees("rainbow@3", sparse_sample(), [](const Graph& g) { return Value(oracle::rainbow_colorings(g, 3)); });
  expect_agrees("nonrep@3", sparse_sample(), [](const Graph& g) { return Value(oracle::nonrepetitive_colorings(g, 3)); });
}

TEST(Registry, MeansAndCounts) {
  const Graph g = disjoint_union(fam("OneEdge(4)"), fam("OneEdge(6)"));
  EXPECT_EQ(evaluate("avg_degree", g), Value(Rational(2, 5)));
  EXPECT_EQ(evaluate("qavg_sq", g), Value(Rational(2, 5)));
  EXPECT_EQ(evaluate("havg", join(fam("Edgeless(2)"), fam("Edgeless(3)"))), Value(Rational(2 * 3 * 5, 4 + 9)));
  EXPECT_EQ(evaluate("max_cc", disjoint_union(fam("CliqueCopies(3)"), fam("CliqueCopies(2)"))), Value(3));
  EXPECT_EQ(evaluate("apex", fam("Star(4)")), Value(1));
  EXPECT_EQ(evaluate("odd_degree", fam("Star(3)")), Value(4));
  EXPECT_EQ(evaluate("x_pow_order", fam("Clique(3)")), Value(Polynomial::monomial(Rational(1), 3)));
}

TEST(Registry, AsymmetryAndPeriodicity) {
  EXPECT_TRUE(evaluate("asymmetric", fam("Asym(6)")).as_bool());
  EXPECT_FALSE(evaluate("asymmetric", disjoint_union(fam("Asym(6)"), fam("Asym(6)"))).as_bool());
  EXPECT_TRUE(evaluate("aperiodic", disjoint_union(fam("DirCycle(2)"), fam("DirCycle(3)"))).as_bool());
  EXPECT_FALSE(evaluate("aperiodic", disjoint_union(fam("DirCycle(4)"), fam("DirCycle(6)"))).as_bool());
}

TEST(Registry, ErrorsAreTyped) {
  EXPECT_THROW(evaluate("no_such_invariant", fam("Clique(2)")), InvalidArgument);
  EXPECT_THROW(evaluate("kconnected", fam("Clique(2)")), InvalidArgument);
  EXPECT_THROW(evaluate("hamiltonian", fam("Clique(19)")), BoundExceeded);
  EXPECT_THROW(evaluate("chromatic@x", fam("Clique(2)")), InvalidArgument);
  EXPECT_FALSE(registered_invariants().empty());
}

}  // namespace
}  // namespace conmat
