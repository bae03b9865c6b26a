// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "conmat/gluing/ops.hpp"
#include "conmat/logic/formula.hpp"
#include "conmat/structures/graph.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// Scalar transduction: the output universe is the set of input elements
// satisfying `universe` (in its free variable `universe_var`), renumbered in
// increasing order; each output relation is defined by a formula whose free
// variables are `vars`; output constants are copied from input constants.
struct Transduction {
  struct Definition {
    std::vector<std::string> vars;
    Formula formula;
  };

  std::string name;
  Vocabulary input;
  Vocabulary output;
  std::string universe_var = "x";
  Formula universe;
  std::vector<Definition> relations;               // aligned with output.relations()
  std::map<std::string, std::string> constants;   // output constant -> input constant

  // Maximum quantifier rank over all defining formulas.
  int rank() const;
};

// Checks vocabulary agreement, free variables, arities and the rank limit
// (defining formulas have quantifier rank <= 2); throws
// InvalidArgument describing the first problem.
void validate(const Transduction& t);

// Forward application Phi*(A).
Structure apply_transduction(const Transduction& t, const Structure& a);

// Backward translation Phi#(theta): atoms replaced by their definitions,
// quantifiers relativized to the universe formula, output constants renamed.
Formula backward_translate(const Transduction& t, const Formula& theta);

// Symmetric closure of a digraph: E(x,y) := E(x,y) | E(y,x).
Transduction phi_sym_transduction();
// Identity on the vocabulary.
Transduction identity_transduction(const Vocabulary& vocab);

// Input vocabulary of the path-product constructions:
// E1, E2 (arcs of the first / second factor, lifted to pairs), Eq1, Eq2
// (same first / second coordinate), EK (edges of the auxiliary triangle),
// PA / PB (product block / triangle block), constants start, end; ordered.
Vocabulary phi_input_vocabulary();
// The input structure for two start/end-labelled digraphs: product pairs
// (row-major) followed, for kP, by a triangle block of three elements.
Structure phi_input(PhiKind kind, const Graph& g1, const Graph& g2);
// The construction as a quantifier-free transduction; apply_transduction on
// phi_input reproduces phi_build exactly.
Transduction phi_transduction(PhiKind kind);

// All registered transductions (identity on graphs, symmetric closure, and
// the four constructions).
std::vector<Transduction> registered_transductions();

// --- Backward-translation identity -----------------------------------------
//
// For every sentence theta over the output vocabulary and every input A:
//   A |= backward_translate(t, theta)  iff  apply_transduction(t, A) |= theta.

// Sentences of quantifier rank <= 3 over {E}, with counting quantifiers; the
// ordered variant adds order atoms.
const std::vector<std::string>& transduction_sentences(bool ordered);

// Input structures used to exercise `t`: for graph vocabularies every binary
// relation on at most 3 elements, every loop-free one on 4 elements and a
// fixed pseudo-random sample on 5 and 6 elements; for the path-product
// constructions phi_input over all pairs of loop-free digraphs with at most
// 3 vertices each and product size <= 6 (start/end at the first and last
// vertex, every start/end choice when both have <= 2 vertices).
std::vector<Structure> transduction_inputs(const Transduction& t);

struct FundamentalResult {
  std::string transduction;
  std::size_t sentences = 0;
  std::size_t structures = 0;
  std::size_t checks = 0;
  std::size_t agreements = 0;
  std::vector<std::string> mismatches;  // first few disagreements

  bool passed() const { return checks > 0 && agreements == checks; }
};

FundamentalResult check_fundamental_property(const Transduction& t,
                                             const std::vector<std::string>& sentences,
                                             const std::vector<Structure>& inputs, int jobs = 1);

}  // namespace conmat
