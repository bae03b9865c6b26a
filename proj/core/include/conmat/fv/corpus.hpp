// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "conmat/exact/polynomial.hpp"
#include "conmat/fv/reduction.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// Bundled sentences (quantifier rank <= 2) over ordered graphs {E, <}. The
// product corpus covers every atom type, the connectives, exists/forall and
// D[2,0], D[2,1], D[3,0], D[3,1], D[3,2]; the union corpus adds the block
// predicates PA/PB and further moduli.
const std::vector<std::string>& fv_product_corpus();
const std::vector<std::string>& fv_union_corpus();

// The ordered vocabulary {E/2}.
Vocabulary ordered_graph_vocabulary();

// Every undirected graph on vertex set {0..n-1}, 1 <= n <= max_n, as an
// ordered structure (the order is the vertex numbering). Enumerated by n, then
// by edge bitmask over the pairs (0,1), (0,2), ..., (n-2,n-1).
std::vector<Structure> ordered_graphs(int max_n);

struct DifferentialResult {
  FvOperation op = FvOperation::kProduct;
  std::size_t formulas = 0;
  std::size_t structures = 0;
  std::size_t checks = 0;        // (formula, A, B) triples evaluated
  std::size_t agreements = 0;
  std::size_t max_length = 0;    // longest reduction sequence
  std::size_t max_nodes = 0;     // largest combiner DAG
  BigInt max_expanded = 0;       // largest fully expanded combiner
  int max_component_rank = 0;    // over all component formulas
  bool rank_preserved = true;    // component rank <= source rank throughout
  std::vector<std::string> mismatches;  // first few disagreements

  bool passed() const { return checks > 0 && agreements == checks && rank_preserved; }
};

// For every corpus sentence and every ordered pair of structures from
// ordered_graphs(max_n), compares eval_via_reduction with direct evaluation
// on the product / rich disjoint union.
DifferentialResult run_fv_differential(FvOperation op, const std::vector<std::string>& corpus,
                                       int max_n = 4, int jobs = 1);

}  // namespace conmat
