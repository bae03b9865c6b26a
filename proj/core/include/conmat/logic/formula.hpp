// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace conmat {

// Abstract syntax of first-order logic with modular counting quantifiers
// D[m,i] x. phi ("the number of x satisfying phi is i modulo m").
enum class FormulaKind {
  kTrue,
  kFalse,
  kAtom,    // R(t1,...,tk)
  kEqual,   // t1 = t2
  kLess,    // t1 < t2 (the distinguished order)
  kNot,
  kAnd,     // n-ary, at least two children
  kOr,      // n-ary, at least two children
  kExists,
  kForall,
  kCount,   // D[m,i]
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

// Terms are names: a name bound by an enclosing quantifier is a variable;
// otherwise it denotes a constant symbol when the vocabulary has one, and a
// free variable if not.
struct FormulaNode {
  FormulaKind kind = FormulaKind::kTrue;
  std::string relation;             // kAtom
  std::vector<std::string> terms;   // kAtom, kEqual, kLess
  std::vector<Formula> children;    // kNot (1), kAnd/kOr (>= 2), quantifiers (1)
  std::string variable;             // quantifiers
  int modulus = 0;                  // kCount
  int residue = 0;                  // kCount
};

// Smart constructors. conj/disj flatten nothing and fold only the trivial
// arities (empty -> true/false, singleton -> the child).
Formula f_true();
Formula f_false();
Formula atom(const std::string& relation, std::vector<std::string> terms);
Formula equal(const std::string& a, const std::string& b);
Formula less(const std::string& a, const std::string& b);
Formula negation(Formula f);
Formula conj(std::vector<Formula> children);
Formula disj(std::vector<Formula> children);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula exists(const std::string& var, Formula body);
Formula forall(const std::string& var, Formula body);
// Throws InvalidArgument unless m >= 2 and 0 <= i < m.
Formula count(int modulus, int residue, const std::string& var, Formula body);

// Structural equality.
bool equal_formulas(const Formula& a, const Formula& b);

// Maximum nesting depth of exists/forall/D quantifiers.
int quantifier_rank(const Formula& f);

// Names occurring free (not bound by an enclosing quantifier). This includes
// constant symbols; callers filter by vocabulary.
std::set<std::string> free_names(const Formula& f);

// Capture-avoiding substitution of free names by names.
Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming);

// Canonical text; parse(to_string(f)) is structurally equal to f.
std::string to_string(const Formula& f);

// Parser for the text grammar (see docs/formula-grammar.md). Throws
// ParseError with the byte offset of the problem.
Formula parse_formula(const std::string& text);

}  // namespace conmat
