// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/words/words.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "conmat/common/error.hpp"

namespace conmat {

Word concat(const Word& u, const Word& v) { return u + v; }

Word bar_concat(const Word& u, const Word& v) { return u + kSeparator + v; }

Dfa::Dfa(std::string alphabet, int states, int start, std::vector<bool> accepting,
         std::vector<std::vector<int>> transitions)
    : alphabet_(std::move(alphabet)),
      states_(states),
      start_(start),
      accepting_(std::move(accepting)),
      delta_(std::move(transitions)) {
  if (states_ < 1) throw InvalidArgument("dfa: at least one state required");
  if (start_ < 0 || start_ >= states_) throw InvalidArgument("dfa: start state out of range");
  if (static_cast<int>(accepting_.size()) != states_ || static_cast<int>(delta_.size()) != states_) {
    throw InvalidArgument("dfa: tables do not match the state count");
  }
  if (alphabet_.find(kSeparator) != std::string::npos) {
    throw InvalidArgument("dfa: the separator symbol cannot belong to the alphabet");
  }
  for (const auto& row : delta_) {
    if (row.size() != alphabet_.size()) throw InvalidArgument("dfa: transition function is not total");
    for (int t : row) {
      if (t < 0 || t >= states_) throw InvalidArgument("dfa: transition target out of range");
    }
  }
}

int Dfa::step(int q, char symbol) const {
  const auto pos = alphabet_.find(symbol);
  if (pos == std::string::npos) return -1;
  return delta_[q][pos];
}

bool Dfa::accepts(const Word& w) const {
  int q = start_;
  for (char c : w) {
    q = step(q, c);
    if (q < 0) return false;
  }
  return accepting_[q];
}

std::string Dfa::to_text() const {
  std::ostringstream out;
  out << "alphabet " << alphabet_ << "\n";
  out << "states " << states_ << "\n";
  out << "start " << start_ << "\n";
  out << "accept";
  for (int q = 0; q < states_; ++q) {
    if (accepting_[q]) out << " " << q;
  }
  out << "\n";
  for (int q = 0; q < states_; ++q) {
    for (std::size_t s = 0; s < alphabet_.size(); ++s) {
      out << "delta " << q << " " << alphabet_[s] << " " << delta_[q][s] << "\n";
    }
  }
  return out.str();
}

Dfa read_dfa(std::istream& in) {
  std::string alphabet;
  int states = -1, start = -1;
  std::vector<int> accept;
  std::vector<std::tuple<int, char, int>> deltas;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    bool ok = true;
    if (key == "alphabet") {
      ok = static_cast<bool>(fields >> alphabet);
    } else if (key == "states") {
      ok = static_cast<bool>(fields >> states);
    } else if (key == "start") {
      ok = static_cast<bool>(fields >> start);
    } else if (key == "accept") {
      int q;
      while (fields >> q) accept.push_back(q);
      ok = fields.eof();
    } else if (key == "delta") {
      int q, t;
      char s;
      ok = static_cast<bool>(fields >> q >> s >> t);
      if (ok) deltas.emplace_back(q, s, t);
    } else {
      throw ParseError("dfa: unknown directive '" + key + "'", line_start);
    }
    if (!ok) throw ParseError("dfa: malformed '" + key + "' line", line_start);
  }
  if (alphabet.empty() || states < 1 || start < 0) {
    throw ParseError("dfa: alphabet, states and start are required", offset);
  }
  std::vector<bool> accepting(states, false);
  for (int q : accept) {
    if (q < 0 || q >= states) throw InvalidArgument("dfa: accepting state out of range");
    accepting[q] = true;
  }
  std::vector<std::vector<int>> delta(states, std::vector<int>(alphabet.size(), -1));
  for (const auto& [q, s, t] : deltas) {
    const auto pos = alphabet.find(s);
    if (q < 0 || q >= states || pos == std::string::npos) {
      throw InvalidArgument("dfa: transition on unknown state or symbol");
    }
    if (delta[q][pos] != -1) throw InvalidArgument("dfa: duplicate transition");
    delta[q][pos] = t;
  }
  return Dfa(alphabet, states, start, accepting, delta);
}

Dfa parse_dfa(const std::string& text) {
  std::istringstream in(text);
  return read_dfa(in);
}

namespace {

const std::map<std::string, std::string>& bundled_texts() {
  static const std::map<std::string, std::string> texts = {
      {"even-ones",
       "# words with an even number of 1s\n"
       "alphabet 01\nstates 2\nstart 0\naccept 0\n"
       "delta 0 0 0\ndelta 0 1 1\ndelta 1 0 1\ndelta 1 1 0\n"},
      {"zero-star",
       "# 0*\n"
       "alphabet 01\nstates 2\nstart 0\naccept 0\n"
       "delta 0 0 0\ndelta 0 1 1\ndelta 1 0 1\ndelta 1 1 1\n"},
      {"zero-one-star",
       "# (01)*\n"
       "alphabet 01\nstates 3\nstart 0\naccept 0\n"
       "delta 0 0 1\ndelta 0 1 2\ndelta 1 0 2\ndelta 1 1 0\ndelta 2 0 2\ndelta 2 1 2\n"},
  };
  return texts;
}

}  // namespace

std::vector<std::string> bundled_dfa_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : bundled_texts()) names.push_back(name);
  return names;
}

Dfa bundled_dfa(const std::string& name) {
  auto it = bundled_texts().find(name);
  if (it == bundled_texts().end()) throw InvalidArgument("unknown bundled dfa '" + name + "'");
  return parse_dfa(it->second);
}

Dfa load_dfa(const std::string& name_or_path) {
  if (bundled_texts().count(name_or_path)) return bundled_dfa(name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw InvalidArgument("dfa '" + name_or_path + "' is neither bundled nor a readable file");
  return read_dfa(in);
}

bool in_l1(const Word& w) {
  if (w.size() % 2 != 0) return false;
  const std::size_t h = w.size() / 2;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != (i < h ? '0' : '1')) return false;
  }
  return true;
}

long word_length(const Word& w) { return static_cast<long>(w.size()); }

namespace {

// Calls visit(start, end) for every nonempty factor w[start, end) in L.
template <class Visit>
void for_each_member_factor(const Dfa& l, const Word& w, Visit visit) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    int q = l.start();
    for (std::size_t j = i; j < w.size(); ++j) {
      q = l.step(q, w[j]);
      if (q < 0) break;  // every longer factor contains the foreign symbol
      if (l.accepting(q)) visit(i, j + 1);
    }
  }
}

}  // namespace

long factor_occurrences(const Dfa& l, const Word& w) {
  long count = 0;
  for_each_member_factor(l, w, [&](std::size_t, std::size_t) { ++count; });
  return count;
}

long distinct_factors(const Dfa& l, const Word& w) {
  std::set<std::string> seen;
  for_each_member_factor(l, w, [&](std::size_t i, std::size_t j) { seen.insert(w.substr(i, j - i)); });
  return static_cast<long>(seen.size());
}

long longest_factor(const Dfa& l, const Word& w) {
  long best = 0;
  for_each_member_factor(l, w, [&](std::size_t i, std::size_t j) { best = std::max(best, static_cast<long>(j - i)); });
  return best;
}

std::string to_string(WordFamily family) {
  switch (family) {
    case WordFamily::kZeros:
      return "zeros";
    case WordFamily::kOnes:
      return "ones";
    case WordFamily::kAll:
      return "all";
  }
  return "?";
}

WordFamily parse_word_family(const std::string& text) {
  if (text == "zeros") return WordFamily::kZeros;
  if (text == "ones") return WordFamily::kOnes;
  if (text == "all") return WordFamily::kAll;
  throw InvalidArgument("unknown word family '" + text + "' (expected zeros, ones or all)");
}

Word word_at(WordFamily family, int index) {
  if (index < 0) throw InvalidArgument("word index must be non-negative");
  switch (family) {
    case WordFamily::kZeros:
      return Word(index, '0');
    case WordFamily::kOnes:
      return Word(index, '1');
    case WordFamily::kAll: {
      // Length-lex: index i has length L where 2^L - 1 <= i < 2^(L+1) - 1.
      int length = 0;
      long first = 0;
      while (index >= first + (1L << length)) {
        first += 1L << length;
        ++length;
      }
      const long rank = index - first;
      Word w(length, '0');
      for (int k = 0; k < length; ++k) {
        if ((rank >> (length - 1 - k)) & 1) w[k] = '1';
      }
      return w;
    }
  }
  return {};
}

std::string to_string(WordOp op) { return op == WordOp::kConcat ? "concat" : "bar_concat"; }

WordOp parse_word_op(const std::string& text) {
  if (text == "concat") return WordOp::kConcat;
  if (text == "bar_concat") return WordOp::kBarConcat;
  throw InvalidArgument("unknown word operation '" + text + "' (expected concat or bar_concat)");
}

WordInvariant parse_word_invariant(const std::string& id) {
  const auto at = id.find('@');
  const std::string name = id.substr(0, at);
  const std::string arg = at == std::string::npos ? "" : id.substr(at + 1);
  if (name == "ell") {
    if (!arg.empty()) throw InvalidArgument("word invariant 'ell' takes no parameter");
    return {id, [](const Word& w) { return Value(word_length(w)); }};
  }
  if (arg.empty()) throw InvalidArgument("word invariant '" + name + "' needs @<language>");
  if (name == "member" && arg == "L1") {
    return {id, [](const Word& w) { return Value(in_l1(w)); }};
  }
  const Dfa dfa = load_dfa(arg);
  if (name == "member") return {id, [dfa](const Word& w) { return Value(dfa.accepts(w)); }};
  if (name == "sL") return {id, [dfa](const Word& w) { return Value(factor_occurrences(dfa, w)); }};
  if (name == "sLdistinct") return {id, [dfa](const Word& w) { return Value(distinct_factors(dfa, w)); }};
  if (name == "mL") return {id, [dfa](const Word& w) { return Value(longest_factor(dfa, w)); }};
  throw InvalidArgument("unknown word invariant '" + id + "'");
}

Matrix word_hankel(const WordInvariant& inv, WordOp op, WordFamily rows, WordFamily cols, int n,
                   int row_start, int col_start) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const Word u = word_at(rows, row_start + i);
    m.row_labels().push_back(u.empty() ? "eps" : u);
    for (int j = 0; j < n; ++j) {
      const Word v = word_at(cols, col_start + j);
      if (i == 0) m.col_labels().push_back(v.empty() ? "eps" : v);
      const Value x = inv.eval(op == WordOp::kConcat ? concat(u, v) : bar_concat(u, v));
      // Booleans enter matrices as 0/1 integers.
      m.set(i, j, x.kind() == ValueKind::kBoolean ? Value(x.as_bool() ? 1 : 0) : x);
    }
  }
  return m;
}

}  // namespace conmat
