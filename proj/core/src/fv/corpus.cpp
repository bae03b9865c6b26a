// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/fv/corpus.hpp"

#include <algorithm>

#include "conmat/common/parallel.hpp"
#include "conmat/gluing/ops.hpp"
#include "conmat/logic/eval.hpp"

namespace conmat {

const std::vector<std::string>& fv_product_corpus() {
  static const std::vector<std::string> corpus = {
      "true",
      "exists x. E(x,x)",
      "exists x y. E(x,y)",
      "exists x y. (x<y & E(x,y))",
      "exists x y. (~x=y & ~E(x,y))",
      "exists x y. (x<y & ~E(x,y))",
      "forall x. exists y. E(x,y)",
      "forall x y. (E(x,y) -> E(y,x))",
      "forall x. exists y. (x<y | x=y)",
      "exists x. forall y. (x=y | E(x,y))",
      "exists x. forall y. (x<y | x=y)",
      "exists x. ~exists y. E(x,y)",
      "~exists x y. (E(x,y) & y<x)",
      "forall x. exists y. (x<y | ~E(x,y))",
      "(exists x y. E(x,y)) & D[2,1] x. x=x",
      "D[2,0] x. x=x",
      "D[2,1] x. x=x",
      "D[3,0] x. x=x",
      "D[3,1] x. x=x",
      "D[3,2] x. x=x",
      "D[2,0] x. exists y. E(x,y)",
      "D[2,1] x. D[2,1] y. E(x,y)",
      "D[2,0] x. forall y. (x=y | ~E(x,y))",
      "D[2,1] x. exists y. (x<y & E(x,y))",
      "D[3,0] x. exists y. E(x,y)",
      "D[3,1] x. exists y. (E(x,y) & y<x)",
      "D[3,2] x. D[2,0] y. E(x,y)",
      "D[3,1] x. forall y. (y<x | y=x)",
      "D[3,0] x. D[3,1] y. E(x,y)",
      "exists x. D[2,1] y. E(x,y)",
      "forall x. D[2,0] y. E(x,y)",
      "exists x. D[3,2] y. E(x,y)",
      "exists x. (exists y. E(x,y) & D[2,0] y. E(y,x))",
      "forall x. ((D[3,0] y. E(x,y)) | exists y. E(y,x))",
      "D[2,0] x. D[3,0] y. E(x,y)",
  };
  return corpus;
}

const std::vector<std::string>& fv_union_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> c = fv_product_corpus();
    const std::vector<std::string> extra = {
        "exists x. (PA(x) & exists y. (PB(y) & x<y))",
        "exists x. (PB(x) & exists y. (PA(y) & x<y))",
        "forall x. (PA(x) | PB(x))",
        "D[2,0] x. PA(x)",
        "exists x y. (PA(x) & PB(y) & E(x,y))",
        "D[3,1] x. (PB(x) & exists y. E(x,y))",
        "D[5,2] x. x=x",
        "D[4,1] x. exists y. E(x,y)",
        "D[2,0] x. D[3,0] y. (x<y | E(x,y))",
        "forall x. (PA(x) -> exists y. (E(x,y) | PB(y)))",
    };
    c.insert(c.end(), extra.begin(), extra.end());
    return c;
  }();
  return corpus;
}

Vocabulary ordered_graph_vocabulary() { return Vocabulary({{"E", 2}}, {}, true); }

std::vector<Structure> ordered_graphs(int max_n) {
  std::vector<Structure> out;
  const Vocabulary vocab = ordered_graph_vocabulary();
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Tuple> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1) {
          edges.push_back({pairs[k].first, pairs[k].second});
          edges.push_back({pairs[k].second, pairs[k].first});
        }
      }
      out.push_back(make_structure(vocab, n, {{"E", edges}}));
    }
  }
  return out;
}

DifferentialResult run_fv_differential(FvOperation op, const std::vector<std::string>& corpus, int max_n,
                                       int jobs) {
  const Vocabulary vocab = ordered_graph_vocabulary();
  const std::vector<Structure> graphs = ordered_graphs(max_n);
  const std::size_t g = graphs.size();
  std::vector<Structure> glued(g * g);
  parallel_for(g * g, jobs, [&](std::size_t k) {
    const auto& a = graphs[k / g];
    const auto& b = graphs[k % g];
    glued[k] = op == FvOperation::kProduct ? ordered_product(a, b) : rich_disjoint_union(a, b);
  });
  const Vocabulary glued_vocab = glued.front().vocabulary();

  DifferentialResult result;
  result.op = op;
  result.formulas = corpus.size();
  result.structures = g;
  for (const auto& text : corpus) {
    const Formula phi = parse_formula(text);
    const ReductionSequence rs = reduce(op, phi, vocab);
    const int rank = quantifier_rank(phi);
    result.max_length = std::max(result.max_length, rs.length());
    result.max_nodes = std::max(result.max_nodes, node_count(rs.combiner));
    result.max_expanded = std::max(result.max_expanded, expanded_node_count(rs.combiner));

    // Truth vectors of both component lists on every structure.
    std::vector<std::vector<bool>> left(g), right(g);
    auto vectors = [&](const std::vector<Formula>& list, std::vector<std::vector<bool>>& out) {
      std::vector<CompiledFormula> compiled;
      for (const auto& f : list) {
        const int r = quantifier_rank(f);
        result.max_component_rank = std::max(result.max_component_rank, r);
        if (r > rank) result.rank_preserved = false;
        compiled.emplace_back(f, vocab, std::vector<std::string>{});
      }
      parallel_for(g, jobs, [&](std::size_t s) {
        out[s].resize(compiled.size());
        for (std::size_t i = 0; i < compiled.size(); ++i) out[s][i] = compiled[i].eval(graphs[s], {});
      });
    };
    vectors(rs.left, left);
    vectors(rs.right, right);

    const CompiledFormula direct(phi, glued_vocab, {});
    std::vector<char> agree(g * g);
    parallel_for(g * g, jobs, [&](std::size_t k) {
      const bool via = eval_combiner(rs.combiner, left[k / g], right[k % g]);
      agree[k] = via == direct.eval(glued[k], {});
    });
    for (std::size_t k = 0; k < g * g; ++k) {
      ++result.checks;
      if (agree[k]) {
        ++result.agreements;
      } else if (result.mismatches.size() < 10) {
        result.mismatches.push_back(text + " on structures #" + std::to_string(k / g) + ", #" +
                                    std::to_string(k % g));
      }
    }
  }
  return result;
}

}  // namespace conmat
