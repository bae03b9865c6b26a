// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "conmat/common/error.hpp"
#include "conmat/fv/corpus.hpp"
#include "conmat/logic/eval.hpp"
#include "conmat/logic/formula.hpp"
#include "conmat/structures/families.hpp"
#include "test_support.hpp"

namespace conmat {
namespace {

Structure graph_structure(const std::string& family) {
  return to_structure(generate(parse_family_id(family)).unlabeled());
}

TEST(Formula, ParsesQuantifiers) {
  const Formula f = parse_formula("exists x. E(x,x)");
  EXPECT_TRUE(equal_formulas(f, exists("x", atom("E", {"x", "x"}))));
  const Formula d = parse_formula("D[2,0] x. x=x");
  EXPECT_TRUE(equal_formulas(d, count(2, 0, "x", equal("x", "x"))));
}

TEST(Formula, ParseErrorsCarryPositions) {
  try {
    parse_formula("E(x,");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 3u);
  }
  EXPECT_THROW(parse_formula("D[1,0] x. true"), Error);
  EXPECT_THROW(parse_formula("exists . E(x,y)"), ParseError);
}

TEST(Formula, QuantifierRank) {
  EXPECT_EQ(quantifier_rank(parse_formula("E(x,y)")), 0);
  EXPECT_EQ(quantifier_rank(parse_formula("exists x. E(x,y)")), 1);
  EXPECT_EQ(quantifier_rank(parse_formula("D[2,0] x. exists y. E(x,y)")), 2);
  EXPECT_EQ(quantifier_rank(parse_formula("(exists x. true) & (forall y z. y=z)")), 2);
}

TEST(Formula, PrintingRoundTripsOnCorpus) {
  for (const auto* corpus : {&fv_product_corpus(), &fv_union_corpus()}) {
    for (const auto& text : *corpus) {
      const Formula f = parse_formula(text);
      EXPECT_TRUE(equal_formulas(parse_formula(to_string(f)), f)) << text;
    }
  }
}

TEST(Formula, ImplicationIsRightAssociative) {
  EXPECT_TRUE(equal_formulas(parse_formula("a=b -> b=c -> c=a"),
                             implies(equal("a", "b"), implies(equal("b", "c"), equal("c", "a")))));
}

TEST(Eval, CountingQuantifierOnStructureSize) {
  const Formula even = parse_formula("D[2,0] x. x=x");
  EXPECT_TRUE(eval(even, graph_structure("Edgeless(4)")));
  EXPECT_FALSE(eval(even, graph_structure("Edgeless(3)")));
}

TEST(Eval, ApexSentence) {
  const Formula apex = parse_formula("exists x. forall y. x=y | E(x,y)");
  EXPECT_TRUE(eval(apex, graph_structure("Clique(3)")));
  EXPECT_FALSE(eval(apex, graph_structure("Edgeless(2)")));
}

TEST(Eval, OddDegreeVertex) {
  const Structure star = graph_structure("Star(3)");
  const Formula odd = parse_formula("D[2,1] y. E(x,y)");
  EXPECT_TRUE(eval(odd, star, {{"x", 0}}));
  EXPECT_TRUE(eval(odd, star, {{"x", 1}}));
  const Structure p3 = graph_structure("Path(3)");
  EXPECT_FALSE(eval(odd, p3, {{"x", 1}}));
}

TEST(Eval, UnassignedFreeVariableIsAnError) {
  EXPECT_THROW(eval(parse_formula("E(x,y)"), graph_structure("Clique(2)")), Error);
}

TEST(Eval, CompiledAgreesWithReferenceOnAllSmallGraphs) {
  const std::vector<std::string> sentences = {
      "exists x y. E(x,y)",
      "forall x. exists y. E(x,y)",
      "D[3,1] x. exists y. E(x,y)",
      "exists x. D[2,0] y. E(x,y)",
      "forall x y. E(x,y) -> E(y,x)",
      "exists x y z. E(x,y) & E(y,z) & E(x,z)",
  };
  // Sentences with directly countable meanings, checked against counts.
  for (const auto& g : testing::graphs_up_to(5)) {
    const Structure s = to_structure(g);
    bool has_edge = g.edge_count() > 0;
    bool no_isolated = true;
    int non_isolated = 0;
    bool even_degree_vertex = false;
    bool triangle = false;
    for (int v = 0; v < g.order(); ++v) {
      no_isolated = no_isolated && g.degree(v) > 0;
      non_isolated += g.degree(v) > 0;
      even_degree_vertex = even_degree_vertex || g.degree(v) % 2 == 0;
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) triangle = triangle || (g.has_edge(v, a) && g.has_edge(a, b) && g.has_edge(v, b));
      }
    }
    const std::vector<bool> want = {has_edge, no_isolated, non_isolated % 3 == 1, even_degree_vertex, true, triangle};
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      const Formula f = parse_formula(sentences[i]);
      ASSERT_EQ(eval(f, s), want[i]) << sentences[i] << " on " << format_graph(g);
      ASSERT_EQ(CompiledFormula(f, s.vocabulary(), {}).eval(s, {}), want[i]) << sentences[i];
    }
  }
}

TEST(Eval, OrderAtom) {
  const auto graphs = ordered_graphs(3);
  const Formula f = parse_formula("exists x y. x<y & E(x,y)");
  for (const auto& s : graphs) {
    EXPECT_EQ(eval(f, s), !s.tuples(*s.vocabulary().relation_index("E")).empty());
  }
}

}  // namespace
}  // namespace conmat
