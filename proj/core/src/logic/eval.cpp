// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/logic/eval.hpp"

#include "conmat/common/error.hpp"

namespace conmat {

CompiledFormula::CompiledFormula(const Formula& f, const Vocabulary& vocab,
                                 std::vector<std::string> free_variables)
    : vocab_(vocab), free_(std::move(free_variables)) {
  std::map<std::string, int> scope;
  for (const auto& v : free_) scope[v] = slots_++;
  root_ = compile(f, scope);
}

int CompiledFormula::compile(const Formula& f, std::map<std::string, int>& scope) {
  Node node;
  node.kind = f->kind;
  for (const auto& t : f->terms) {
    auto it = scope.find(t);
    if (it != scope.end()) {
      node.args.push_back(it->second);
    } else if (auto c = vocab_.constant_index(t)) {
      node.args.push_back(-static_cast<int>(*c) - 1);
    } else {
      throw InvalidArgument("unbound free variable '" + t + "'");
    }
  }
  switch (f->kind) {
    case FormulaKind::kAtom: {
      auto rel = vocab_.relation_index(f->relation);
      if (!rel) throw InvalidArgument("unknown relation symbol '" + f->relation + "'");
      if (vocab_.relations()[*rel].arity != static_cast<int>(f->terms.size())) {
        throw InvalidArgument("arity mismatch in atom " + to_string(f));
      }
      node.relation = static_cast<int>(*rel);
      break;
    }
    case FormulaKind::kLess:
      if (!vocab_.ordered()) throw InvalidArgument("order atom over an unordered vocabulary");
      break;
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount: {
      node.slot = slots_++;
      node.modulus = f->modulus;
      node.residue = f->residue;
      auto saved = scope.find(f->variable);
      const bool had = saved != scope.end();
      const int previous = had ? saved->second : -1;
      scope[f->variable] = node.slot;
      node.children.push_back(compile(f->children[0], scope));
      if (had) {
        scope[f->variable] = previous;
      } else {
        scope.erase(f->variable);
      }
      break;
    }
    default:
      for (const auto& c : f->children) node.children.push_back(compile(c, scope));
      break;
  }
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

bool CompiledFormula::eval(const Structure& s, const std::vector<int>& free_values) const {
  if (!(s.vocabulary() == vocab_)) {
    throw InvalidArgument("structure vocabulary " + s.vocabulary().to_string() +
                          " differs from the compiled vocabulary " + vocab_.to_string());
  }
  if (free_values.size() != free_.size()) {
    throw InvalidArgument("expected " + std::to_string(free_.size()) + " free-variable values");
  }
  std::vector<int> env(slots_, 0);
  for (std::size_t i = 0; i < free_values.size(); ++i) {
    if (free_values[i] < 0 || free_values[i] >= s.size()) {
      throw InvalidArgument("value of '" + free_[i] + "' out of range");
    }
    env[i] = free_values[i];
  }
  return run(root_, s, env);
}

bool CompiledFormula::run(int index, const Structure& s, std::vector<int>& env) const {
  const Node& node = nodes_[index];
  auto term = [&](int arg) { return arg >= 0 ? env[arg] : s.constant(-arg - 1); };
  switch (node.kind) {
    case FormulaKind::kTrue:
      return true;
    case FormulaKind::kFalse:
      return false;
    case FormulaKind::kAtom: {
      int tuple[8];
      std::vector<int> big;
      int* t = tuple;
      if (node.args.size() > 8) {
        big.resize(node.args.size());
        t = big.data();
      }
      for (std::size_t k = 0; k < node.args.size(); ++k) t[k] = term(node.args[k]);
      return s.holds(node.relation, t);
    }
    case FormulaKind::kEqual:
      return term(node.args[0]) == term(node.args[1]);
    case FormulaKind::kLess:
      return term(node.args[0]) < term(node.args[1]);
    case FormulaKind::kNot:
      return !run(node.children[0], s, env);
    case FormulaKind::kAnd:
      for (int c : node.children) {
        if (!run(c, s, env)) return false;
      }
      return true;
    case FormulaKind::kOr:
      for (int c : node.children) {
        if (run(c, s, env)) return true;
      }
      return false;
    case FormulaKind::kExists:
      for (int a = 0; a < s.size(); ++a) {
        env[node.slot] = a;
        if (run(node.children[0], s, env)) return true;
      }
      return false;
    case FormulaKind::kForall:
      for (int a = 0; a < s.size(); ++a) {
        env[node.slot] = a;
        if (!run(node.children[0], s, env)) return false;
      }
      return true;
    case FormulaKind::kCount: {
      int hits = 0;
      for (int a = 0; a < s.size(); ++a) {
        env[node.slot] = a;
        if (run(node.children[0], s, env)) ++hits;
      }
      return hits % node.modulus == node.residue;
    }
  }
  return false;
}

bool eval(const Formula& f, const Structure& s, const Assignment& sigma) {
  std::vector<std::string> names;
  std::vector<int> values;
  for (const auto& [name, value] : sigma) {
    names.push_back(name);
    values.push_back(value);
  }
  // Assigned variables shadow constants of the same name.
  return CompiledFormula(f, s.vocabulary(), names).eval(s, values);
}

}  // namespace conmat
