// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conmat/exact/polynomial.hpp"

namespace conmat {

// Boolean combiner of a reduction sequence: an expression DAG over the truth
// values b1_i of the left component formulas and b2_j of the right ones.
enum class CombinerKind {
  kConst,
  kVar,
  kNot,
  kAnd,
  kOr,
  // Residue family: the disjunction, over every choice of one option per
  // item whose residues sum to `target` modulo `modulus`, of the conjunction
  // of the chosen clauses. This is the subset-family combiner of the counting
  // quantifiers (for D[2,0] the items are the clauses j and the choices are
  // exactly the even subsets T of J). It is kept symbolic and evaluated by a
  // residue dynamic program; expand() materializes the literal disjunction.
  kResidue,
};

struct CombinerNode;
using Combiner = std::shared_ptr<const CombinerNode>;

struct ResidueOption {
  int residue = 0;
  Combiner clause;
};

struct CombinerNode {
  CombinerKind kind = CombinerKind::kConst;
  bool value = false;               // kConst
  int side = 0;                     // kVar: 1 = left, 2 = right
  int index = 0;                    // kVar: 0-based position in that list
  std::vector<Combiner> children;   // kNot (1), kAnd/kOr (>= 2)
  std::string label;                // kResidue: display name, e.g. "EVEN"
  int modulus = 0;                  // kResidue
  int target = 0;                   // kResidue
  std::vector<std::vector<ResidueOption>> items;  // kResidue
};

// Constructors fold constants and flatten nested conjunctions/disjunctions;
// c_not removes double negation. No further simplification is attempted.
Combiner c_const(bool value);
Combiner c_var(int side, int index);
Combiner c_not(Combiner c);
Combiner c_and(std::vector<Combiner> children);
Combiner c_or(std::vector<Combiner> children);
Combiner c_and(Combiner a, Combiner b);
Combiner c_or(Combiner a, Combiner b);
// Options whose clause is constant false are dropped; an item left without
// options makes the family false; a family without items is `target == 0`.
Combiner c_residue(std::string label, int modulus, int target,
                   std::vector<std::vector<ResidueOption>> items);

bool eval_combiner(const Combiner& c, const std::vector<bool>& left,
                   const std::vector<bool>& right);

// Replaces the variables of one side by the given constants and folds.
Combiner restrict_side(const Combiner& c, int side, const std::vector<bool>& values);
// Renames variables: b1_i -> b1_{left_map[i]}, b2_j -> b2_{right_map[j]}.
Combiner remap(const Combiner& c, const std::vector<int>& left_map,
               const std::vector<int>& right_map);

// Rewrites every residue family as its literal disjunction. Throws
// BoundExceeded when a family has more than `max_choices` option choices.
Combiner expand(const Combiner& c, std::size_t max_choices = 1u << 16);

// Distinct nodes of the DAG.
std::size_t node_count(const Combiner& c);
// Tree size of the fully expanded combiner (residue families counted as
// their literal disjunctions), computed without materializing it.
BigInt expanded_node_count(const Combiner& c);
// Largest variable index + 1 referenced on `side`.
int referenced_width(const Combiner& c, int side);

// Text form: b1_3, b2_1, true/false, ~c, (a & b), (a | b), and
// LABEL[m,i]{ r:clause, ... ; ... } for residue families.
std::string to_string(const Combiner& c);

}  // namespace conmat
