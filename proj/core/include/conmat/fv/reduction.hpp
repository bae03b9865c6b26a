// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "conmat/fv/combiner.hpp"
#include "conmat/logic/eval.hpp"
#include "conmat/logic/formula.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// Component formula lists plus a Boolean combiner: for the operation it was
// compiled for, A op B satisfies the source formula iff the combiner is true
// on the truth vectors of `left` on A and `right` on B.
struct ReductionSequence {
  std::vector<Formula> left;
  std::vector<Formula> right;
  Combiner combiner;

  std::size_t length() const { return left.size() + right.size(); }
};

enum class FvOperation { kProduct, kUnion };

std::string to_string(FvOperation op);
FvOperation parse_fv_operation(const std::string& text);

// Which component a free variable of a union formula ranges over.
enum class Block { kLeft = 1, kRight = 2 };

// Ordered product A x B (lexicographic order, E holds componentwise,
// constants paired). `vocab` is the common component vocabulary; names in
// `free_variables` denote element pairs and appear with the same name in the
// component formulas. Counting quantifiers must have modulus 2 or 3.
// Throws InvalidArgument on unknown symbols, undeclared free variables or an
// unsupported modulus, BoundExceeded when a truth table would exceed
// 2^22 rows.
ReductionSequence reduce_product(const Formula& phi, const Vocabulary& vocab,
                                 const std::vector<std::string>& free_variables = {});

// Rich disjoint union A + B with block predicates PA/PB and the order placing
// every A-element before every B-element. `vocab` is the component vocabulary
// (constant-free, without PA/PB); each free variable is placed in a block.
// Any modulus is supported.
ReductionSequence reduce_union(const Formula& phi, const Vocabulary& vocab,
                               const std::map<std::string, Block>& free_variables = {});

ReductionSequence reduce(FvOperation op, const Formula& phi, const Vocabulary& vocab);

// Truth vectors of the component lists, then the combiner. For products the
// assignments give the two coordinates of each free variable; for unions each
// side assigns the variables placed in its block.
bool eval_via_reduction(const ReductionSequence& rs, const Structure& a, const Structure& b,
                        const Assignment& sigma_a = {}, const Assignment& sigma_b = {});

// Human-readable listing: both formula lists, the combiner, and the sizes
// (sequence length, combiner DAG nodes, expanded combiner nodes).
std::string to_string(const ReductionSequence& rs);

}  // namespace conmat
