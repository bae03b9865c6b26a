// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "conmat/exact/value.hpp"
#include "conmat/exactalg/matrix.hpp"

namespace conmat {

// Words are strings of symbol characters; the default alphabet is {0,1}.
using Word = std::string;

// Separator inserted by bar_concat; never a member of a DFA alphabet.
inline constexpr char kSeparator = 'a';

Word concat(const Word& u, const Word& v);
// u a v with the fresh separator symbol a.
Word bar_concat(const Word& u, const Word& v);

// Complete deterministic automaton. Symbols outside the alphabet (such as the
// separator) lead to rejection.
class Dfa {
 public:
  Dfa(std::string alphabet, int states, int start, std::vector<bool> accepting,
      std::vector<std::vector<int>> transitions);

  const std::string& alphabet() const { return alphabet_; }
  int states() const { return states_; }
  int start() const { return start_; }
  bool accepting(int q) const { return accepting_[q]; }
  // -1 for a symbol outside the alphabet.
  int step(int q, char symbol) const;
  bool accepts(const Word& w) const;

  // Text format (lines; '#' starts a comment):
  //   alphabet <symbols>
  //   states <count>
  //   start <state>
  //   accept <state> ...
  //   delta <state> <symbol> <target>     one line per (state, symbol)
  std::string to_text() const;

 private:
  std::string alphabet_;
  int states_;
  int start_;
  std::vector<bool> accepting_;
  std::vector<std::vector<int>> delta_;  // [state][symbol index]
};

Dfa parse_dfa(const std::string& text);
Dfa read_dfa(std::istream& in);

// Bundled automata: "even-ones" (even number of 1s), "zero-star" (0*),
// "zero-one-star" ((01)*).
std::vector<std::string> bundled_dfa_names();
Dfa bundled_dfa(const std::string& name);
// A bundled name, or otherwise a path to a DFA text file.
Dfa load_dfa(const std::string& name_or_path);

// L1 = { 0^n 1^n : n >= 0 }, the standard non-regular language.
bool in_l1(const Word& w);

// Length l(w).
long word_length(const Word& w);
// s_L(w): occurrences of members of L as nonempty contiguous factors, one per
// (start, end) position pair, overlaps included.
long factor_occurrences(const Dfa& l, const Word& w);
// Distinct nonempty factors of w that belong to L.
long distinct_factors(const Dfa& l, const Word& w);
// m_L(w): length of the longest nonempty factor of w in L; 0 if none.
long longest_factor(const Dfa& l, const Word& w);

// Word-indexed families for Hankel matrices. Index i >= 0.
enum class WordFamily {
  kZeros,  // 0^i
  kOnes,   // 1^i
  kAll,    // the i-th binary word in length-lexicographic order (i = 0 is the empty word)
};

std::string to_string(WordFamily family);
WordFamily parse_word_family(const std::string& text);
Word word_at(WordFamily family, int index);

enum class WordOp { kConcat, kBarConcat };
std::string to_string(WordOp op);
WordOp parse_word_op(const std::string& text);

// A word parameter by id: "member@L1", "member@<dfa>", "ell", "sL@<dfa>",
// "sLdistinct@<dfa>", "mL@<dfa>" (dfa: bundled name or file path).
struct WordInvariant {
  std::string id;
  std::function<Value(const Word&)> eval;
};

WordInvariant parse_word_invariant(const std::string& id);

// Entry (i, j) = inv(op(word_at(rows, row_start + i), word_at(cols, col_start + j))).
Matrix word_hankel(const WordInvariant& inv, WordOp op, WordFamily rows, WordFamily cols, int n,
                   int row_start = 0, int col_start = 0);

}  // namespace conmat
