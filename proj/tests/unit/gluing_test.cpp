// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "conmat/common/error.hpp"
#include "conmat/gluing/ops.hpp"
#include "conmat/gluing/transduction.hpp"
#include "conmat/logic/eval.hpp"
#include "conmat/logic/formula.hpp"
#include "conmat/structures/families.hpp"
#include "test_support.hpp"

namespace conmat {
namespace {

Graph fam(const std::string& text) { return generate(parse_family_id(text)); }

TEST(Gluing, DisjointUnionOfEdgeless) {
  EXPECT_EQ(disjoint_union(fam("Edgeless(2)"), fam("Edgeless(3)")), fam("Edgeless(5)"));
}

TEST(Gluing, RichDisjointUnionMarksBlocks) {
  const Structure a = to_structure(Graph(1));
  const Structure u = rich_disjoint_union(a, a);
  EXPECT_EQ(u.size(), 2);
  const auto pa = *u.vocabulary().relation_index("PA");
  const auto pb = *u.vocabulary().relation_index("PB");
  EXPECT_TRUE(u.holds(pa, Tuple{0}));
  EXPECT_FALSE(u.holds(pa, Tuple{1}));
  EXPECT_TRUE(u.holds(pb, Tuple{1}));
}

TEST(Gluing, OneSumOfDirectedPaths) {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const Graph g = k_sum(fam("DirPath(" + std::to_string(i) + ")"),
                            fam("DirPath(" + std::to_string(j) + ")"), {{"end", "start"}});
      EXPECT_TRUE(isomorphic(g.unlabeled(), fam("DirPath(" + std::to_string(i + j - 1) + ")").unlabeled()))
          << i << "," << j;
    }
  }
}

TEST(Gluing, OneSumOfCliques) {
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      const Graph g = k_sum(fam("Clique(" + std::to_string(i) + ")"), fam("Clique(" + std::to_string(j) + ")"), 1);
      EXPECT_EQ(g.order(), i + j - 1);
      EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(i * (i - 1) / 2 + j * (j - 1) / 2));
    }
  }
  EXPECT_THROW(k_sum(fam("Edgeless(2)"), fam("Clique(2)"), 1), Error);
}

TEST(Gluing, JoinOfEdgelessIsCompleteBipartite) {
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const Graph g = join(fam("Edgeless(" + std::to_string(i) + ")"), fam("Edgeless(" + std::to_string(j) + ")"));
      EXPECT_TRUE(isomorphic(g, generate(FamilyId{FamilyKind::kCompleteBipartite, i, j}).unlabeled()));
    }
  }
}

TEST(Gluing, ModifiedJoinOfSingleVertices) {
  const Graph g = mod_join(fam("Clique(1)"), fam("Clique(1)"));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(isomorphic(g.unlabeled(), fam("Star(3)").unlabeled()));
}

TEST(Gluing, ProductMultipliesOrders) {
  const Graph g = graph_product(fam("Clique(3)"), fam("Path(4)"));
  EXPECT_EQ(g.order(), 12);
  const Vocabulary ordered({{"E", 2}}, {}, true);
  const Structure s = ordered_product(make_structure(ordered, 3, {}), make_structure(ordered, 4, {}));
  EXPECT_EQ(s.size(), 12);
  EXPECT_THROW(ordered_product(to_structure(Graph(3)), to_structure(Graph(4))), Error);
}

TEST(Gluing, AttachPendants) {
  const Graph k2 = fam("Path(2)");
  EXPECT_EQ(attach_pendants(k2, 3), k2);
  const Graph g = attach_pendants(k2.unlabeled(), 4);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Gluing, PhiConstructionsAreDefinedOnDirectedPaths) {
  EXPECT_THROW(phi_build(PhiKind::kT, 1, 3), InvalidArgument);
  EXPECT_THROW(phi_build(PhiKind::kF, Graph(3), Graph(3)), InvalidArgument);  // no start/end labels
  for (PhiKind kind : {PhiKind::kF, PhiKind::kT, PhiKind::kP, PhiKind::kB}) {
    EXPECT_EQ(phi_build(kind, 3, 4).unlabeled().order() > 0, true) << to_string(kind);
  }
  EXPECT_EQ(parse_gluing_op("phi:B+K:2").id(), "phi:B+K:2");
  EXPECT_EQ(parse_gluing_op("ksum:1").id(), "ksum:1");
  EXPECT_THROW(parse_gluing_op("glue"), Error);
}

TEST(Transductions, SymmetrizationOfDirectedTriangle) {
  const Structure cycle = to_structure(fam("DirCycle(3)"));
  const Structure out = apply_transduction(phi_sym_transduction(), cycle);
  EXPECT_EQ(graph_from_structure(out, false), fam("Clique(3)").unlabeled());
}

TEST(Transductions, IdentityCopiesTheStructure) {
  for (const auto& g : testing::graphs_up_to(3)) {
    const Structure s = to_structure(g);
    EXPECT_EQ(apply_transduction(identity_transduction(s.vocabulary()), s), s);
  }
}

TEST(Transductions, FalseUniverseGivesEmptyStructure) {
  Transduction t = identity_transduction(to_structure(Graph(2)).vocabulary());
  t.universe = f_false();
  EXPECT_EQ(apply_transduction(t, to_structure(fam("Clique(3)").unlabeled())).size(), 0);
}

TEST(Transductions, BackwardTranslation) {
  const Transduction t = phi_sym_transduction();
  const Formula e = backward_translate(t, parse_formula("E(x,y)"));
  const Formula want = parse_formula("E(x,y) | E(y,x)");
  // Up to the universe relativization, which is trivial for Phi_sym.
  for (const auto& g : testing::graphs_up_to(3)) {
    const Structure s = to_structure(g);
    for (int x = 0; x < s.size(); ++x) {
      for (int y = 0; y < s.size(); ++y) {
        EXPECT_EQ(eval(e, s, {{"x", x}, {"y", y}}), eval(want, s, {{"x", x}, {"y", y}}));
      }
    }
  }
  EXPECT_TRUE(equal_formulas(backward_translate(t, f_true()), f_true()));
}

TEST(Transductions, FundamentalPropertyOnSmallInputs) {
  for (const Transduction& t : registered_transductions()) {
    auto inputs = transduction_inputs(t);
    inputs.resize(std::min<std::size_t>(inputs.size(), 60));
    const auto res = check_fundamental_property(t, transduction_sentences(t.output.ordered()), inputs);
    EXPECT_TRUE(res.passed()) << t.name << ": " << (res.mismatches.empty() ? "" : res.mismatches.front());
  }
}

TEST(Transductions, PhiTransductionsMatchDirectConstruction) {
  for (PhiKind kind : {PhiKind::kF, PhiKind::kT, PhiKind::kP, PhiKind::kB}) {
    for (int a = 3; a <= 4; ++a) {
      const Graph p1 = fam("DirPath(" + std::to_string(a) + ")");
      const Graph p2 = fam("DirPath(3)");
      const Graph via = graph_from_structure(apply_transduction(phi_transduction(kind), phi_input(kind, p1, p2)), false);
      EXPECT_TRUE(isomorphic(via, phi_build(kind, p1, p2).unlabeled(), 24)) << to_string(kind) << a;
    }
  }
}

}  // namespace
}  // namespace conmat
