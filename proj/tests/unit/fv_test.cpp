// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "conmat/common/error.hpp"
#include "conmat/fv/combiner.hpp"
#include "conmat/fv/corpus.hpp"
#include "conmat/fv/reduction.hpp"
#include "conmat/gluing/ops.hpp"
#include "conmat/logic/eval.hpp"
#include "conmat/logic/formula.hpp"

namespace conmat {
namespace {

Structure ordered_edgeless(int n) { return make_structure(ordered_graph_vocabulary(), n, {}); }

Structure ordered_single_edge() { return make_structure(ordered_graph_vocabulary(), 2, {{"E", {{0, 1}, {1, 0}}}}); }

// Truth table of the combiner over all inputs of the given widths.
std::vector<bool> truth_table(const Combiner& c, std::size_t left, std::size_t right) {
  std::vector<bool> out;
  for (std::uint32_t m = 0; m < (1u << (left + right)); ++m) {
    std::vector<bool> l(left), r(right);
    for (std::size_t i = 0; i < left; ++i) l[i] = (m >> i) & 1;
    for (std::size_t i = 0; i < right; ++i) r[i] = (m >> (left + i)) & 1;
    out.push_back(eval_combiner(c, l, r));
  }
  return out;
}

TEST(FvProduct, EdgeAtomIsAConjunction) {
  const auto rs = reduce_product(parse_formula("E(u,v)"), ordered_graph_vocabulary(), {"u", "v"});
  ASSERT_EQ(rs.left.size(), 1u);
  ASSERT_EQ(rs.right.size(), 1u);
  EXPECT_TRUE(equal_formulas(rs.left[0], parse_formula("E(u,v)")));
  EXPECT_TRUE(equal_formulas(rs.right[0], parse_formula("E(u,v)")));
  EXPECT_EQ(truth_table(rs.combiner, 1, 1), truth_table(c_and(c_var(1, 0), c_var(2, 0)), 1, 1));
}

TEST(FvProduct, OrderAtomIsLexicographic) {
  const auto rs = reduce_product(parse_formula("u<v"), ordered_graph_vocabulary(), {"u", "v"});
  ASSERT_EQ(rs.left.size(), 2u);
  ASSERT_EQ(rs.right.size(), 2u);
  EXPECT_TRUE(equal_formulas(rs.left[0], parse_formula("u<v")));
  EXPECT_TRUE(equal_formulas(rs.left[1], parse_formula("u=v")));
  const Combiner lex = c_or(c_var(1, 0), c_and(c_var(1, 1), c_var(2, 0)));
  EXPECT_EQ(truth_table(rs.combiner, 2, 2), truth_table(lex, 2, 2));
}

TEST(FvProduct, EvaluatesOnAssignedElements) {
  const auto rs = reduce_product(parse_formula("E(u,v)"), ordered_graph_vocabulary(), {"u", "v"});
  const Structure e = ordered_single_edge();
  EXPECT_TRUE(eval_via_reduction(rs, e, e, {{"u", 0}, {"v", 1}}, {{"u", 0}, {"v", 1}}));
  EXPECT_FALSE(eval_via_reduction(rs, e, e, {{"u", 0}, {"v", 1}}, {{"u", 0}, {"v", 0}}));
}

TEST(FvProduct, CountingModuli) {
  const auto even = reduce_product(parse_formula("D[2,0] x. x=x"), ordered_graph_vocabulary());
  EXPECT_TRUE(eval_via_reduction(even, ordered_edgeless(3), ordered_edgeless(2)));
  EXPECT_FALSE(eval_via_reduction(even, ordered_edgeless(3), ordered_edgeless(3)));
  const auto one_mod_3 = reduce_product(parse_formula("D[3,1] x. x=x"), ordered_graph_vocabulary());
  EXPECT_TRUE(eval_via_reduction(one_mod_3, ordered_edgeless(2), ordered_edgeless(2)));
  EXPECT_FALSE(eval_via_reduction(one_mod_3, ordered_edgeless(2), ordered_edgeless(3)));
  EXPECT_THROW(reduce_product(parse_formula("D[5,1] x. x=x"), ordered_graph_vocabulary()), InvalidArgument);
}

TEST(FvProduct, RejectsUnknownSymbols) {
  EXPECT_THROW(reduce_product(parse_formula("exists x. R(x)"), ordered_graph_vocabulary()), InvalidArgument);
  EXPECT_THROW(reduce_product(parse_formula("E(x,y)"), ordered_graph_vocabulary()), InvalidArgument);
}

TEST(FvUnion, BlockPredicatesAndHigherModuli) {
  const Vocabulary vocab = ordered_graph_vocabulary();
  const auto rs = reduce_union(parse_formula("D[5,2] x. PA(x) | E(x,x)"), vocab);
  for (int a = 0; a <= 6; ++a) {
    EXPECT_EQ(eval_via_reduction(rs, ordered_edgeless(a), ordered_edgeless(1)), a % 5 == 2) << a;
  }
}

TEST(FvDifferential, SmallProductAndUnionSweeps) {
  const std::vector<std::string> sentences = {
      "exists x y. E(x,y) & x<y",
      "forall x. exists y. E(x,y) | x=y",
      "D[2,1] x. exists y. E(x,y)",
      "D[3,2] x. forall y. y<x -> E(x,y)",
  };
  for (FvOperation op : {FvOperation::kProduct, FvOperation::kUnion}) {
    const auto res = run_fv_differential(op, sentences, 3);
    EXPECT_TRUE(res.passed()) << to_string(op) << ": " << (res.mismatches.empty() ? "" : res.mismatches.front());
    EXPECT_EQ(res.checks, sentences.size() * res.structures * res.structures);
  }
}

TEST(FvCorpus, SizesAndRanks) {
  EXPECT_GE(fv_product_corpus().size(), 30u);
  EXPECT_GE(fv_union_corpus().size(), 30u);
  for (const auto& s : fv_product_corpus()) {
    EXPECT_LE(quantifier_rank(parse_formula(s)), 3) << s;
  }
  EXPECT_EQ(ordered_graphs(3).size(), 1u + 2u + 8u);
}

TEST(Combiner, ResidueNodesCountModulo) {
  const Combiner c = c_residue("EVEN", 2, 0, {{{0, c_const(true)}, {1, c_var(1, 0)}}, {{1, c_var(2, 0)}}});
  // The second item forces residue 1 (needs b2_1), so the sum is even only
  // with the residue-1 option of the first item (needs b1_1).
  const auto want = truth_table(c_and(c_var(1, 0), c_var(2, 0)), 1, 1);
  EXPECT_EQ(truth_table(c, 1, 1), want);
  EXPECT_EQ(truth_table(expand(c), 1, 1), want);
  EXPECT_GT(node_count(c), 1u);
  EXPECT_FALSE(to_string(c).empty());
}

}  // namespace
}  // namespace conmat
