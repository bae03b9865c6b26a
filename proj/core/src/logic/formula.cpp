// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "conmat/common/error.hpp"

namespace conmat {

namespace {

FormulaNode node_of(FormulaKind kind) {
  FormulaNode node;
  node.kind = kind;
  return node;
}

Formula make(FormulaNode node) { return std::make_shared<const FormulaNode>(std::move(node)); }

bool is_quantifier(FormulaKind k) {
  return k == FormulaKind::kExists || k == FormulaKind::kForall || k == FormulaKind::kCount;
}

}  // namespace

Formula f_true() {
  static const Formula t = make(node_of(FormulaKind::kTrue));
  return t;
}

Formula f_false() {
  static const Formula f = make(node_of(FormulaKind::kFalse));
  return f;
}

Formula atom(const std::string& relation, std::vector<std::string> terms) {
  FormulaNode n = node_of(FormulaKind::kAtom);
  n.relation = relation;
  n.terms = std::move(terms);
  return make(std::move(n));
}

Formula equal(const std::string& a, const std::string& b) {
  FormulaNode n = node_of(FormulaKind::kEqual);
  n.terms = {a, b};
  return make(std::move(n));
}

Formula less(const std::string& a, const std::string& b) {
  FormulaNode n = node_of(FormulaKind::kLess);
  n.terms = {a, b};
  return make(std::move(n));
}

Formula negation(Formula f) {
  FormulaNode n = node_of(FormulaKind::kNot);
  n.children = {std::move(f)};
  return make(std::move(n));
}

Formula conj(std::vector<Formula> children) {
  if (children.empty()) return f_true();
  if (children.size() == 1) return children.front();
  FormulaNode n = node_of(FormulaKind::kAnd);
  n.children = std::move(children);
  return make(std::move(n));
}

Formula disj(std::vector<Formula> children) {
  if (children.empty()) return f_false();
  if (children.size() == 1) return children.front();
  FormulaNode n = node_of(FormulaKind::kOr);
  n.children = std::move(children);
  return make(std::move(n));
}

Formula conj(Formula a, Formula b) { return conj(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return disj(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return disj(negation(std::move(a)), std::move(b)); }

Formula exists(const std::string& var, Formula body) {
  FormulaNode n = node_of(FormulaKind::kExists);
  n.variable = var;
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula forall(const std::string& var, Formula body) {
  FormulaNode n = node_of(FormulaKind::kForall);
  n.variable = var;
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula count(int modulus, int residue, const std::string& var, Formula body) {
  if (modulus < 2 || residue < 0 || residue >= modulus) {
    throw InvalidArgument("counting quantifier D[" + std::to_string(modulus) + "," +
                          std::to_string(residue) + "] needs m >= 2 and 0 <= i < m");
  }
  FormulaNode n = node_of(FormulaKind::kCount);
  n.variable = var;
  n.modulus = modulus;
  n.residue = residue;
  n.children = {std::move(body)};
  return make(std::move(n));
}

bool equal_formulas(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind || a->relation != b->relation || a->terms != b->terms ||
      a->variable != b->variable || a->modulus != b->modulus || a->residue != b->residue ||
      a->children.size() != b->children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    if (!equal_formulas(a->children[i], b->children[i])) return false;
  }
  return true;
}

int quantifier_rank(const Formula& f) {
  int inner = 0;
  for (const auto& c : f->children) inner = std::max(inner, quantifier_rank(c));
  return is_quantifier(f->kind) ? inner + 1 : inner;
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  for (const auto& t : f->terms) {
    if (bound.count(t) == 0) out.insert(t);
  }
  if (is_quantifier(f->kind)) {
    auto it = bound.insert(f->variable);
    collect_free(f->children[0], bound, out);
    bound.erase(it);
    return;
  }
  for (const auto& c : f->children) collect_free(c, bound, out);
}

void collect_all_names(const Formula& f, std::set<std::string>& out) {
  out.insert(f->terms.begin(), f->terms.end());
  if (is_quantifier(f->kind)) out.insert(f->variable);
  for (const auto& c : f->children) collect_all_names(c, out);
}

}  // namespace

std::set<std::string> free_names(const Formula& f) {
  std::set<std::string> out;
  std::multiset<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

Formula substitute(const Formula& f, const std::map<std::string, std::string>& renaming) {
  if (renaming.empty()) return f;
  FormulaNode n = *f;
  for (auto& t : n.terms) {
    auto it = renaming.find(t);
    if (it != renaming.end()) t = it->second;
  }
  if (is_quantifier(f->kind)) {
    auto inner = renaming;
    inner.erase(f->variable);
    // Rename the bound variable if it would capture a substituted name.
    bool captures = false;
    for (const auto& [from, to] : inner) {
      if (to == f->variable && free_names(f->children[0]).count(from) > 0) captures = true;
    }
    if (captures) {
      std::set<std::string> used;
      collect_all_names(f->children[0], used);
      for (const auto& [from, to] : inner) used.insert(to);
      std::string fresh;
      for (int k = 1;; ++k) {
        fresh = f->variable + "_" + std::to_string(k);
        if (used.count(fresh) == 0) break;
      }
      inner[f->variable] = fresh;
      n.variable = fresh;
    }
    n.children = {substitute(f->children[0], inner)};
    return make(std::move(n));
  }
  for (auto& c : n.children) c = substitute(c, renaming);
  return make(std::move(n));
}

// ---------------------------------------------------------------------------
// Printer.

namespace {

std::string print(const Formula& f);

std::string wrap(const Formula& f) { return "(" + print(f) + ")"; }

std::string print(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::kTrue:
      return "true";
    case FormulaKind::kFalse:
      return "false";
    case FormulaKind::kAtom: {
      std::string out = f->relation + "(";
      for (std::size_t i = 0; i < f->terms.size(); ++i) out += (i ? "," : "") + f->terms[i];
      return out + ")";
    }
    case FormulaKind::kEqual:
      return f->terms[0] + "=" + f->terms[1];
    case FormulaKind::kLess:
      return f->terms[0] + "<" + f->terms[1];
    case FormulaKind::kNot: {
      const auto& c = f->children[0];
      const bool atomic = c->kind == FormulaKind::kNot || c->kind == FormulaKind::kAtom ||
                          c->kind == FormulaKind::kEqual || c->kind == FormulaKind::kLess ||
                          c->kind == FormulaKind::kTrue || c->kind == FormulaKind::kFalse;
      return "~" + (atomic ? print(c) : wrap(c));
    }
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      const bool is_and = f->kind == FormulaKind::kAnd;
      std::string out;
      for (std::size_t i = 0; i < f->children.size(); ++i) {
        const auto& c = f->children[i];
        const bool paren = is_quantifier(c->kind) || c->kind == f->kind ||
                           (is_and && c->kind == FormulaKind::kOr);
        out += (i ? (is_and ? " & " : " | ") : "") + (paren ? wrap(c) : print(c));
      }
      return out;
    }
    case FormulaKind::kExists:
      return "exists " + f->variable + ". " + print(f->children[0]);
    case FormulaKind::kForall:
      return "forall " + f->variable + ". " + print(f->children[0]);
    case FormulaKind::kCount:
      return "D[" + std::to_string(f->modulus) + "," + std::to_string(f->residue) + "] " +
             f->variable + ". " + print(f->children[0]);
  }
  return "";
}

}  // namespace

std::string to_string(const Formula& f) { return print(f); }

// ---------------------------------------------------------------------------
// Parser.
//
//   formula := disj ( "->" formula )?
//   disj    := conj ( ("|" | "or") conj )*
//   conj    := unary ( ("&" | "and") unary )*
//   unary   := ("~" | "!" | "not") unary
//            | ("exists" | "forall") ident+ "." formula
//            | "D" "[" int "," int "]" ident "." formula
//            | primary
//   primary := "true" | "false" | "(" formula ")"
//            | ident "(" ident ("," ident)* ")"
//            | ident ("=" | "!=" | "<") ident

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Formula parse() {
    Formula f = formula();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_str(const char* lit) {
    skip();
    return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0;
  }

  bool accept(const char* lit) {
    if (!peek_str(lit)) return false;
    pos_ += std::char_traits<char>::length(lit);
    return true;
  }

  void expect(const char* lit) {
    if (!accept(lit)) fail(std::string("expected '") + lit + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  // Reads an identifier without consuming it.
  std::string peek_ident() {
    skip();
    std::size_t p = pos_;
    if (p >= s_.size() || !ident_start(s_[p])) return "";
    while (p < s_.size() && ident_char(s_[p])) ++p;
    return s_.substr(pos_, p - pos_);
  }

  bool accept_keyword(const char* kw) {
    if (peek_ident() != kw) return false;
    pos_ += std::char_traits<char>::length(kw);
    return true;
  }

  static bool reserved(const std::string& w) {
    return w == "exists" || w == "forall" || w == "not" || w == "and" || w == "or" ||
           w == "true" || w == "false";
  }

  std::string ident() {
    std::string w = peek_ident();
    if (w.empty()) fail("expected identifier");
    if (reserved(w)) fail("keyword '" + w + "' used as identifier");
    pos_ += w.size();
    return w;
  }

  int integer() {
    skip();
    std::size_t p = pos_;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == pos_) fail("expected integer");
    const int value = std::stoi(s_.substr(pos_, p - pos_));
    pos_ = p;
    return value;
  }

  Formula formula() {
    Formula left = disjunction();
    if (accept("->")) return implies(left, formula());
    return left;
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (accept("|") || accept_keyword("or")) parts.push_back(conjunction());
    return disj(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (accept("&") || accept_keyword("and")) parts.push_back(unary());
    return conj(std::move(parts));
  }

  Formula unary() {
    skip();
    if (peek_str("!=")) fail("unexpected '!='");
    if (accept("~") || accept("!") || accept_keyword("not")) return negation(unary());
    const bool is_exists = peek_ident() == "exists";
    if (is_exists || peek_ident() == "forall") {
      pos_ += 6;
      std::vector<std::string> vars{ident()};
      while (!peek_str(".")) vars.push_back(ident());
      expect(".");
      Formula body = formula();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = is_exists ? exists(*it, body) : forall(*it, body);
      }
      return body;
    }
    if (peek_ident() == "D") {
      const std::size_t save = pos_;
      pos_ += 1;
      if (accept("[")) {
        const std::size_t at = pos_;
        const int m = integer();
        expect(",");
        const int i = integer();
        expect("]");
        const std::string var = ident();
        expect(".");
        Formula body = formula();
        if (m < 2 || i < 0 || i >= m) {
          throw ParseError("counting quantifier needs m >= 2 and 0 <= i < m", at);
        }
        return count(m, i, var, body);
      }
      pos_ = save;
    }
    return primary();
  }

  Formula primary() {
    if (accept("(")) {
      Formula f = formula();
      expect(")");
      return f;
    }
    if (accept_keyword("true")) return f_true();
    if (accept_keyword("false")) return f_false();
    const std::string name = ident();
    if (accept("(")) {
      std::vector<std::string> terms{ident()};
      while (accept(",")) terms.push_back(ident());
      expect(")");
      return atom(name, std::move(terms));
    }
    if (accept("!=")) return negation(equal(name, ident()));
    if (accept("=")) return equal(name, ident());
    if (accept("<")) return less(name, ident());
    fail("expected '(', '=', '!=' or '<' after '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

}  // namespace conmat
