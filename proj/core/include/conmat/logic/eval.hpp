// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "conmat/logic/formula.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// Partial map from variable names to universe elements.
using Assignment = std::map<std::string, int>;

// A formula resolved against a vocabulary: relation symbols become indices,
// names become variable slots or constant indices. Evaluation is naive
// enumeration, O(n^rank). Immutable and thread-safe.
class CompiledFormula {
 public:
  // `free_variables` fixes the order of free-variable values passed to eval();
  // names of the formula that are neither bound, listed, nor constants of the
  // vocabulary are rejected.
  CompiledFormula(const Formula& f, const Vocabulary& vocab,
                  std::vector<std::string> free_variables);

  const std::vector<std::string>& free_variables() const { return free_; }
  bool eval(const Structure& s, const std::vector<int>& free_values) const;

 private:
  struct Node {
    FormulaKind kind;
    int relation = -1;
    std::vector<int> args;      // >= 0: variable slot; < 0: constant -(c+1)
    std::vector<int> children;  // node indices
    int slot = -1;              // bound slot of a quantifier
    int modulus = 0;
    int residue = 0;
  };

  int compile(const Formula& f, std::map<std::string, int>& scope);
  bool run(int node, const Structure& s, std::vector<int>& env) const;

  Vocabulary vocab_;
  std::vector<std::string> free_;
  std::vector<Node> nodes_;
  int root_ = -1;
  int slots_ = 0;
};

// Tarski semantics with D[m,i] counting. Throws InvalidArgument on unknown
// symbols, order atoms over unordered vocabularies, or unassigned free
// variables.
bool eval(const Formula& f, const Structure& s, const Assignment& sigma = {});

}  // namespace conmat
