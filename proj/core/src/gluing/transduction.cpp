// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/gluing/transduction.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "conmat/common/error.hpp"
#include "conmat/common/parallel.hpp"
#include "conmat/logic/eval.hpp"

namespace conmat {

int Transduction::rank() const {
  int r = quantifier_rank(universe);
  for (const auto& d : relations) r = std::max(r, quantifier_rank(d.formula));
  return r;
}

namespace {

// Free names of f that are not constants of `vocab`.
std::set<std::string> free_variables(const Formula& f, const Vocabulary& vocab) {
  std::set<std::string> out;
  for (const auto& name : free_names(f)) {
    if (!vocab.constant_index(name)) out.insert(name);
  }
  return out;
}

}  // namespace

void validate(const Transduction& t) {
  if (t.relations.size() != t.output.relations().size()) {
    throw InvalidArgument("transduction '" + t.name + "': one definition per output relation required");
  }
  auto check = [&](const Formula& f, const std::vector<std::string>& vars, const std::string& what) {
    for (const auto& v : free_variables(f, t.input)) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
        throw InvalidArgument("transduction '" + t.name + "': " + what + " has stray free variable '" + v + "'");
      }
    }
    // Compiling checks symbols and arities.
    CompiledFormula(f, t.input, vars);
  };
  if (t.rank() > 2) {
    throw InvalidArgument("transduction '" + t.name + "': defining formulas must have rank <= 2");
  }
  check(t.universe, {t.universe_var}, "universe formula");
  for (std::size_t r = 0; r < t.relations.size(); ++r) {
    const auto& def = t.relations[r];
    if (static_cast<int>(def.vars.size()) != t.output.relations()[r].arity) {
      throw InvalidArgument("transduction '" + t.name + "': arity mismatch for '" +
                            t.output.relations()[r].name + "'");
    }
    check(def.formula, def.vars, "definition of " + t.output.relations()[r].name);
  }
  for (const auto& c : t.output.constants()) {
    auto it = t.constants.find(c);
    if (it == t.constants.end() || !t.input.constant_index(it->second)) {
      throw InvalidArgument("transduction '" + t.name + "': output constant '" + c + "' is not mapped");
    }
  }
}

Structure apply_transduction(const Transduction& t, const Structure& a) {
  validate(t);
  if (!(a.vocabulary() == t.input)) {
    throw InvalidArgument("transduction '" + t.name + "': input vocabulary mismatch");
  }
  const CompiledFormula universe(t.universe, t.input, {t.universe_var});
  std::vector<int> elements;
  std::vector<int> position(a.size(), -1);
  for (int e = 0; e < a.size(); ++e) {
    if (universe.eval(a, {e})) {
      position[e] = static_cast<int>(elements.size());
      elements.push_back(e);
    }
  }
  const int n = static_cast<int>(elements.size());
  std::map<std::string, std::vector<Tuple>> rels;
  for (std::size_t r = 0; r < t.relations.size(); ++r) {
    const auto& def = t.relations[r];
    const CompiledFormula f(def.formula, t.input, def.vars);
    const int arity = static_cast<int>(def.vars.size());
    auto& out = rels[t.output.relations()[r].name];
    std::vector<int> idx(arity, 0);
    if (n == 0) continue;
    while (true) {
      std::vector<int> values(arity);
      for (int k = 0; k < arity; ++k) values[k] = elements[idx[k]];
      if (f.eval(a, values)) out.push_back(idx);
      int k = arity - 1;
      while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
      if (k < 0) break;
    }
  }
  std::map<std::string, int> constants;
  for (const auto& c : t.output.constants()) {
    const int e = a.constant(*t.input.constant_index(t.constants.at(c)));
    if (position[e] < 0) {
      throw InvalidArgument("transduction '" + t.name + "': constant '" + c + "' leaves the universe");
    }
    constants[c] = position[e];
  }
  return make_structure(t.output, n, rels, constants);
}

namespace {

Formula translate(const Transduction& t, const Formula& f, std::set<std::string>& bound) {
  auto rename_term = [&](const std::string& term) {
    if (bound.count(term)) return term;
    auto it = t.constants.find(term);
    return it == t.constants.end() ? term : it->second;
  };
  switch (f->kind) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return f;
    case FormulaKind::kAtom: {
      auto r = t.output.relation_index(f->relation);
      if (!r) throw InvalidArgument("backward_translate: unknown relation '" + f->relation + "'");
      const auto& def = t.relations[*r];
      if (def.vars.size() != f->terms.size()) {
        throw InvalidArgument("backward_translate: arity mismatch in " + to_string(f));
      }
      std::map<std::string, std::string> renaming;
      for (std::size_t k = 0; k < def.vars.size(); ++k) renaming[def.vars[k]] = rename_term(f->terms[k]);
      return substitute(def.formula, renaming);
    }
    case FormulaKind::kEqual:
      return equal(rename_term(f->terms[0]), rename_term(f->terms[1]));
    case FormulaKind::kLess:
      if (!t.output.ordered()) throw InvalidArgument("backward_translate: order atom over unordered output");
      return less(rename_term(f->terms[0]), rename_term(f->terms[1]));
    case FormulaKind::kNot:
      return negation(translate(t, f->children[0], bound));
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      std::vector<Formula> parts;
      for (const auto& c : f->children) parts.push_back(translate(t, c, bound));
      return f->kind == FormulaKind::kAnd ? conj(std::move(parts)) : disj(std::move(parts));
    }
    case FormulaKind::kExists:
    case FormulaKind::kForall:
    case FormulaKind::kCount: {
      const bool was_bound = bound.count(f->variable) > 0;
      bound.insert(f->variable);
      Formula body = translate(t, f->children[0], bound);
      if (!was_bound) bound.erase(f->variable);
      const Formula in_universe = substitute(t.universe, {{t.universe_var, f->variable}});
      if (f->kind == FormulaKind::kExists) return exists(f->variable, conj(in_universe, body));
      if (f->kind == FormulaKind::kForall) return forall(f->variable, implies(in_universe, body));
      return count(f->modulus, f->residue, f->variable, conj(in_universe, body));
    }
  }
  throw InvalidArgument("backward_translate: unhandled formula");
}

}  // namespace

Formula backward_translate(const Transduction& t, const Formula& theta) {
  std::set<std::string> bound;
  return translate(t, theta, bound);
}

Transduction phi_sym_transduction() {
  Transduction t;
  t.name = "phi_sym";
  t.input = Vocabulary({{"E", 2}}, {}, false);
  t.output = t.input;
  t.universe = f_true();
  t.relations = {{{"x", "y"}, parse_formula("E(x,y) | E(y,x)")}};
  return t;
}

Transduction identity_transduction(const Vocabulary& vocab) {
  Transduction t;
  t.name = "identity";
  t.input = vocab;
  t.output = vocab;
  t.universe = f_true();
  for (const auto& r : vocab.relations()) {
    std::vector<std::string> vars;
    for (int k = 0; k < r.arity; ++k) vars.push_back("x" + std::to_string(k + 1));
    t.relations.push_back({vars, atom(r.name, vars)});
  }
  for (const auto& c : vocab.constants()) t.constants[c] = c;
  return t;
}

Vocabulary phi_input_vocabulary() {
  return Vocabulary({{"E1", 2}, {"E2", 2}, {"Eq1", 2}, {"Eq2", 2}, {"EK", 2}, {"PA", 1}, {"PB", 1}},
                    {"start", "end"}, true);
}

Structure phi_input(PhiKind kind, const Graph& g1, const Graph& g2) {
  auto s1 = g1.label("start"), e1 = g1.label("end");
  auto s2 = g2.label("start"), e2 = g2.label("end");
  if (!s1 || !e1 || !s2 || !e2) throw InvalidArgument("phi_input: operands need start/end labels");
  const int n1 = g1.order(), n2 = g2.order(), product = n1 * n2;
  const int n = product + (kind == PhiKind::kP ? 3 : 0);
  std::map<std::string, std::vector<Tuple>> rels;
  for (int v = 0; v < product; ++v) {
    rels["PA"].push_back({v});
    for (int u = 0; u < product; ++u) {
      const int v1 = v / n2, v2 = v % n2, u1 = u / n2, u2 = u % n2;
      if (g1.has_edge(v1, u1)) rels["E1"].push_back({v, u});
      if (g2.has_edge(v2, u2)) rels["E2"].push_back({v, u});
      if (v1 == u1) rels["Eq1"].push_back({v, u});
      if (v2 == u2) rels["Eq2"].push_back({v, u});
    }
  }
  for (int x = product; x < n; ++x) {
    rels["PB"].push_back({x});
    for (int y = product; y < n; ++y) {
      if (x != y) rels["EK"].push_back({x, y});
    }
  }
  return make_structure(phi_input_vocabulary(), n, rels,
                        {{"start", *s1 * n2 + *s2}, {"end", *e1 * n2 + *e2}});
}

Transduction phi_transduction(PhiKind kind) {
  std::string directed;
  switch (kind) {
    case PhiKind::kF:
      directed = "(E1(x,y) & E2(x,y)) | (x=start & y=end)";
      break;
    case PhiKind::kT:
      directed =
          "(E1(x,y) & E2(x,y)) | (Eq1(x,y) & Eq1(x,start) & E2(x,y)) | "
          "(Eq1(x,y) & Eq1(x,end) & E2(x,y))";
      break;
    case PhiKind::kB:
      directed =
          "(E1(start,x) & E1(y,end) & Eq2(x,start) & Eq2(y,end)) | (E1(x,y) & E2(x,y)) | "
          "(Eq1(x,y) & Eq1(x,start) & E2(x,y)) | (Eq2(x,y) & Eq2(x,start) & E1(x,y) & ~Eq1(x,start)) | "
          "(Eq1(x,y) & Eq1(x,end) & E2(x,y)) | (Eq2(x,y) & Eq2(x,end) & E1(x,y) & ~Eq1(y,end))";
      break;
    case PhiKind::kP:
      directed = "(PA(x) & PA(y) & E1(x,y) & E2(x,y)) | EK(x,y) | (PB(x) & (y=start | y=end))";
      break;
  }
  const Formula forward = parse_formula(directed);
  const Formula backward = substitute(forward, {{"x", "y"}, {"y", "x"}});
  Transduction t;
  t.name = "phi_" + to_string(kind);
  t.input = phi_input_vocabulary();
  t.output = Vocabulary({{"E", 2}}, {}, false);
  t.universe = f_true();
  t.relations = {{{"x", "y"}, conj(negation(equal("x", "y")), disj(forward, backward))}};
  return t;
}

std::vector<Transduction> registered_transductions() {
  return {identity_transduction(Vocabulary({{"E", 2}}, {}, true)),
          phi_sym_transduction(),
          phi_transduction(PhiKind::kF),
          phi_transduction(PhiKind::kT),
          phi_transduction(PhiKind::kP),
          phi_transduction(PhiKind::kB)};
}

// --- Backward-translation identity -----------------------------------------

const std::vector<std::string>& transduction_sentences(bool ordered) {
  static const std::vector<std::string> plain = {
      "true",
      "exists x. E(x,x)",
      "exists x y. E(x,y)",
      "exists x y. (E(x,y) & ~E(y,x))",
      "forall x y. (E(x,y) -> E(y,x))",
      "forall x. exists y. E(x,y)",
      "exists x. ~exists y. E(x,y)",
      "exists x. forall y. (x=y | E(x,y))",
      "forall x y. (x=y | E(x,y))",
      "exists x y z. (E(x,y) & E(y,z) & E(z,x))",
      "exists x y z. (~x=y & ~y=z & ~x=z & ~E(x,y) & ~E(y,z) & ~E(x,z))",
      "forall x y. (E(x,y) -> exists z. (E(x,z) & E(z,y)))",
      "forall x. exists y z. (~y=z & E(x,y) & E(x,z))",
      "~exists x y z. (E(x,y) & E(y,z) & ~x=z & ~E(x,z))",
      "exists x y. (~x=y & forall z. ((E(x,z) -> E(y,z)) & (E(y,z) -> E(x,z))))",
      "forall x y. exists z. (x=y | E(x,z) | E(z,y))",
      "D[2,0] x. x=x",
      "D[2,1] x. exists y. E(x,y)",
      "D[3,0] x. D[2,1] y. E(x,y)",
      "D[2,0] x. D[2,0] y. D[2,1] z. (E(x,z) & E(z,y))",
      "exists x. D[2,1] y. E(x,y)",
      "forall x. D[2,0] y. E(x,y)",
      "D[3,1] x. exists y z. (E(x,y) & E(y,z) & E(z,x))",
      "D[3,2] x. forall y. (E(x,y) -> exists z. E(y,z))",
      "forall x. exists y. (E(y,x) & D[2,1] z. E(y,z))",
      "(exists x y. E(x,y)) & D[2,1] x. x=x",
  };
  static const std::vector<std::string> with_order = [] {
    std::vector<std::string> c = plain;
    const std::vector<std::string> extra = {
        "exists x y. (x<y & E(y,x))",
        "exists x. forall y. (x<y | x=y)",
        "D[2,1] x. exists y. (x<y & E(x,y))",
        "forall x y z. ((x<y & y<z & E(x,z)) -> (E(x,y) | E(y,z)))",
        "forall x y. (x<y -> (E(x,y) | exists z. (x<z & z<y)))",
    };
    c.insert(c.end(), extra.begin(), extra.end());
    return c;
  }();
  return ordered ? with_order : plain;
}

namespace {

// Every binary relation E on n elements whose bitmask (over the pairs listed
// row-major, loops optionally skipped) is taken from `masks`.
void binary_structures(const Vocabulary& vocab, int n, bool loops,
                       const std::vector<std::uint64_t>& masks, std::vector<Structure>& out) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (loops || u != v) pairs.emplace_back(u, v);
    }
  }
  for (std::uint64_t mask : masks) {
    std::vector<Tuple> tuples;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1) tuples.push_back({pairs[k].first, pairs[k].second});
    }
    out.push_back(make_structure(vocab, n, {{"E", tuples}}));
  }
}

std::vector<std::uint64_t> all_masks(int bits) {
  std::vector<std::uint64_t> masks(std::size_t{1} << bits);
  for (std::size_t m = 0; m < masks.size(); ++m) masks[m] = m;
  return masks;
}

std::vector<std::uint64_t> sample_masks(int bits, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> masks(count);
  const std::uint64_t keep = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  for (auto& m : masks) m = rng() & keep;
  return masks;
}

// Loop-free digraphs on n vertices with every arc set.
std::vector<Graph> digraphs(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    Graph g(n, true, true);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if ((mask >> k) & 1) g.add_edge(arcs[k].first, arcs[k].second);
    }
    out.push_back(g);
  }
  return out;
}

// Copies of g with start/end at the first and last vertex, or at every
// possible pair when `all_labels`.
std::vector<Graph> labelled(const Graph& g, bool all_labels) {
  std::vector<Graph> out;
  const int n = g.order();
  for (int s = 0; s < n; ++s) {
    for (int e = 0; e < n; ++e) {
      if (!all_labels && (s != 0 || e != n - 1)) continue;
      Graph h = g;
      h.set_label("start", s);
      h.set_label("end", e);
      out.push_back(h);
    }
  }
  return out;
}

}  // namespace

std::vector<Structure> transduction_inputs(const Transduction& t) {
  std::vector<Structure> out;
  if (t.input == phi_input_vocabulary()) {
    PhiKind kind = PhiKind::kF;
    if (t.name == "phi_T") kind = PhiKind::kT;
    if (t.name == "phi_P") kind = PhiKind::kP;
    if (t.name == "phi_B") kind = PhiKind::kB;
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        if (a * b > 6) continue;
        const bool all_labels = a <= 2 && b <= 2;
        for (const auto& g1 : digraphs(a)) {
          for (const auto& l1 : labelled(g1, all_labels)) {
            for (const auto& g2 : digraphs(b)) {
              for (const auto& l2 : labelled(g2, all_labels)) out.push_back(phi_input(kind, l1, l2));
            }
          }
        }
      }
    }
    return out;
  }
  const auto& rels = t.input.relations();
  if (rels.size() != 1 || rels[0].arity != 2 || !t.input.constants().empty()) {
    throw InvalidArgument("transduction_inputs: no input generator for '" + t.name + "'");
  }
  for (int n = 1; n <= 3; ++n) binary_structures(t.input, n, true, all_masks(n * n), out);
  binary_structures(t.input, 4, false, all_masks(12), out);
  binary_structures(t.input, 5, false, sample_masks(20, 400, 5), out);
  binary_structures(t.input, 6, false, sample_masks(30, 400, 6), out);
  return out;
}

FundamentalResult check_fundamental_property(const Transduction& t,
                                             const std::vector<std::string>& sentences,
                                             const std::vector<Structure>& inputs, int jobs) {
  validate(t);
  FundamentalResult result;
  result.transduction = t.name;
  result.sentences = sentences.size();
  result.structures = inputs.size();

  std::vector<Structure> outputs(inputs.size());
  parallel_for(inputs.size(), jobs, [&](std::size_t s) { outputs[s] = apply_transduction(t, inputs[s]); });

  for (const auto& text : sentences) {
    const Formula theta = parse_formula(text);
    const CompiledFormula direct(theta, t.output, {});
    const CompiledFormula translated(backward_translate(t, theta), t.input, {});
    std::vector<char> agree(inputs.size());
    parallel_for(inputs.size(), jobs, [&](std::size_t s) {
      agree[s] = direct.eval(outputs[s], {}) == translated.eval(inputs[s], {});
    });
    for (std::size_t s = 0; s < inputs.size(); ++s) {
      ++result.checks;
      if (agree[s]) {
        ++result.agreements;
      } else if (result.mismatches.size() < 5) {
        result.mismatches.push_back(t.name + ": '" + text + "' on input #" + std::to_string(s));
      }
    }
  }
  return result;
}

}  // namespace conmat
