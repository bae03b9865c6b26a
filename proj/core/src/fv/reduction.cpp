// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/fv/reduction.hpp"

#include <cstdint>
#include <set>
#include <sstream>

#include "conmat/common/error.hpp"

namespace conmat {

std::string to_string(FvOperation op) { return op == FvOperation::kProduct ? "product" : "union"; }

FvOperation parse_fv_operation(const std::string& text) {
  if (text == "product") return FvOperation::kProduct;
  if (text == "union") return FvOperation::kUnion;
  throw InvalidArgument("unknown fv operation '" + text + "' (expected product or union)");
}

namespace {

// Largest truth table enumerated when a quantifier is reduced.
constexpr std::size_t kMaxTableBits = 22;

std::vector<bool> bits_of(std::uint64_t mask, std::size_t width) {
  std::vector<bool> out(width);
  for (std::size_t i = 0; i < width; ++i) out[i] = ((mask >> i) & 1) != 0;
  return out;
}

// The conjunction fixing every formula of `list` to the bits of `mask`.
Formula alpha(const std::vector<Formula>& list, std::uint64_t mask) {
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < list.size(); ++i) {
    literals.push_back(((mask >> i) & 1) ? list[i] : negation(list[i]));
  }
  return conj(std::move(literals));
}

// Equality is symmetric: orient it so that syntactic deduplication of
// component formulas identifies x=y with y=x.
Formula oriented_equal(const std::string& a, const std::string& b) { return a <= b ? equal(a, b) : equal(b, a); }

// Accumulates deduplicated component lists (keyed by canonical text).
class Builder {
 public:
  int add(int side, const Formula& f) {
    auto& index = index_[side - 1];
    auto& list = lists_[side - 1];
    auto [it, inserted] = index.emplace(to_string(f), static_cast<int>(list.size()));
    if (inserted) list.push_back(f);
    return it->second;
  }

  // Adds the formulas of the chosen sides of `rs` and returns its combiner
  // renamed to the builder's positions.
  Combiner import(const ReductionSequence& rs, bool left = true, bool right = true) {
    std::vector<int> left_map, right_map;
    if (left) {
      for (const auto& f : rs.left) left_map.push_back(add(1, f));
    }
    if (right) {
      for (const auto& f : rs.right) right_map.push_back(add(2, f));
    }
    return remap(rs.combiner, left_map, right_map);
  }

  ReductionSequence finish(Combiner c) {
    return ReductionSequence{std::move(lists_[0]), std::move(lists_[1]), std::move(c)};
  }

 private:
  std::vector<Formula> lists_[2];
  std::map<std::string, int> index_[2];
};

ReductionSequence constant(bool value) { return ReductionSequence{{}, {}, c_const(value)}; }

void check_table(std::size_t bits) {
  if (bits > kMaxTableBits) {
    throw BoundExceeded("reduction truth table over " + std::to_string(bits) + " component formulas exceeds 2^" +
                        std::to_string(kMaxTableBits));
  }
}

void check_atom(const Vocabulary& vocab, const Formula& f) {
  auto rel = vocab.relation_index(f->relation);
  if (!rel) throw InvalidArgument("unknown relation symbol '" + f->relation + "'");
  if (vocab.relations()[*rel].arity != static_cast<int>(f->terms.size())) {
    throw InvalidArgument("arity mismatch in atom " + to_string(f));
  }
}

// --- Ordered product ---------------------------------------------------------

class ProductReducer {
 public:
  explicit ProductReducer(const Vocabulary& vocab) : vocab_(vocab) {}

  ReductionSequence run(const Formula& f, std::set<std::string>& scope) {
    switch (f->kind) {
      case FormulaKind::kTrue:
        return constant(true);
      case FormulaKind::kFalse:
        return constant(false);
      case FormulaKind::kAtom:
        check_terms(f, scope);
        check_atom(vocab_, f);
        return {{f}, {f}, c_and(c_var(1, 0), c_var(2, 0))};
      case FormulaKind::kEqual: {
        check_terms(f, scope);
        const Formula eq = oriented_equal(f->terms[0], f->terms[1]);
        return {{eq}, {eq}, c_and(c_var(1, 0), c_var(2, 0))};
      }
      case FormulaKind::kLess: {
        check_terms(f, scope);
        if (!vocab_.ordered()) throw InvalidArgument("order atom over an unordered vocabulary");
        // (a1,b1) < (a2,b2) iff a1 < a2, or a1 = a2 and b1 < b2.
        const Formula eq = oriented_equal(f->terms[0], f->terms[1]);
        return {{f, eq}, {f, eq}, c_or(c_var(1, 0), c_and(c_var(1, 1), c_var(2, 0)))};
      }
      case FormulaKind::kNot: {
        auto child = run(f->children[0], scope);
        child.combiner = c_not(child.combiner);
        return child;
      }
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        Builder builder;
        std::vector<Combiner> parts;
        for (const auto& c : f->children) parts.push_back(builder.import(run(c, scope)));
        return builder.finish(f->kind == FormulaKind::kAnd ? c_and(std::move(parts)) : c_or(std::move(parts)));
      }
      case FormulaKind::kForall:
        return run(negation(exists(f->variable, negation(f->children[0]))), scope);
      case FormulaKind::kExists:
      case FormulaKind::kCount:
        return quantifier(f, scope);
    }
    throw InvalidArgument("reduce_product: unhandled formula");
  }

 private:
  void check_terms(const Formula& f, const std::set<std::string>& scope) const {
    for (const auto& t : f->terms) {
      if (!scope.count(t) && !vocab_.constant_index(t)) {
        throw InvalidArgument("free variable '" + t + "' is not declared");
      }
    }
  }

  ReductionSequence quantifier(const Formula& f, std::set<std::string>& scope) {
    if (f->kind == FormulaKind::kCount && f->modulus != 2 && f->modulus != 3) {
      throw InvalidArgument("reduce_product supports counting quantifiers with modulus 2 or 3, got " +
                            std::to_string(f->modulus));
    }
    const std::string& x = f->variable;
    const bool was_bound = scope.count(x) > 0;
    scope.insert(x);
    const ReductionSequence child = run(f->children[0], scope);
    if (!was_bound) scope.erase(x);

    const std::size_t m = child.left.size(), n = child.right.size();
    check_table(m + n);
    // The total clauses C_j: assignments (cA, cB) satisfying the combiner.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clauses;
    for (std::uint64_t ca = 0; ca < (std::uint64_t{1} << m); ++ca) {
      const Combiner rest = restrict_side(child.combiner, 1, bits_of(ca, m));
      if (rest->kind == CombinerKind::kConst && !rest->value) continue;
      for (std::uint64_t cb = 0; cb < (std::uint64_t{1} << n); ++cb) {
        if (eval_combiner(rest, {}, bits_of(cb, n))) clauses.emplace_back(ca, cb);
      }
    }

    Builder builder;
    // Component formula for alpha_j under a quantifier, one per residue.
    auto component = [&](int side, std::uint64_t mask, int modulus, int residue) {
      const Formula a = alpha(side == 1 ? child.left : child.right, mask);
      const Formula q = modulus == 0 ? exists(x, a) : count(modulus, residue, x, a);
      return c_var(side, builder.add(side, q));
    };

    if (f->kind == FormulaKind::kExists) {
      std::vector<Combiner> disjuncts;
      for (const auto& [ca, cb] : clauses) {
        disjuncts.push_back(c_and(component(1, ca, 0, 0), component(2, cb, 0, 0)));
      }
      return builder.finish(c_or(std::move(disjuncts)));
    }

    std::vector<std::vector<ResidueOption>> items;
    if (f->modulus == 2) {
      // |{(a,b) : phi}| is even iff the number of clauses j whose alpha_j has
      // an odd count on both sides is even: the set T of such j ranges over
      // the even subsets of J.
      for (const auto& [ca, cb] : clauses) {
        const Combiner l = component(1, ca, 2, 0), r = component(2, cb, 2, 0);
        items.push_back({{1, c_and(c_not(l), c_not(r))}, {0, c_or(l, r)}});
      }
      const Combiner even = c_residue("EVEN", 2, 0, std::move(items));
      return builder.finish(f->residue == 0 ? even : c_not(even));
    }
    // Modulus 3: clause j contributes (count_A mod 3) * (count_B mod 3); the
    // classes T11, T22 contribute 1, T12, T21 contribute 2, the rest 0.
    for (const auto& [ca, cb] : clauses) {
      Combiner l[3], r[3];
      for (int q = 0; q < 3; ++q) {
        l[q] = component(1, ca, 3, q);
        r[q] = component(2, cb, 3, q);
      }
      items.push_back({{1, c_and(l[1], r[1])},
                       {1, c_and(l[2], r[2])},
                       {2, c_and(l[1], r[2])},
                       {2, c_and(l[2], r[1])},
                       {0, c_or(l[0], r[0])}});
    }
    return builder.finish(c_residue("RES3", 3, f->residue, std::move(items)));
  }

  const Vocabulary& vocab_;
};

// --- Rich disjoint union -----------------------------------------------------

class UnionReducer {
 public:
  explicit UnionReducer(const Vocabulary& vocab) : vocab_(vocab) {}

  ReductionSequence run(const Formula& f, std::map<std::string, Block>& scope) {
    switch (f->kind) {
      case FormulaKind::kTrue:
        return constant(true);
      case FormulaKind::kFalse:
        return constant(false);
      case FormulaKind::kAtom: {
        const int side = common_side(f, scope);
        if (!vocab_.relation_index(f->relation) && (f->relation == "PA" || f->relation == "PB")) {
          if (f->terms.size() != 1) throw InvalidArgument("arity mismatch in atom " + to_string(f));
          return constant((f->relation == "PA") == (side == 1));
        }
        check_atom(vocab_, f);
        return side == 0 ? constant(false) : on_side(side, f);
      }
      case FormulaKind::kEqual: {
        const int side = common_side(f, scope);
        return side == 0 ? constant(false) : on_side(side, oriented_equal(f->terms[0], f->terms[1]));
      }
      case FormulaKind::kLess: {
        if (!vocab_.ordered()) throw InvalidArgument("order atom over an unordered vocabulary");
        const int side = common_side(f, scope);
        if (side != 0) return on_side(side, f);
        // Every A-element precedes every B-element.
        return constant(location(f->terms[0], scope) == 1);
      }
      case FormulaKind::kNot: {
        auto child = run(f->children[0], scope);
        child.combiner = c_not(child.combiner);
        return child;
      }
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        Builder builder;
        std::vector<Combiner> parts;
        for (const auto& c : f->children) parts.push_back(builder.import(run(c, scope)));
        return builder.finish(f->kind == FormulaKind::kAnd ? c_and(std::move(parts)) : c_or(std::move(parts)));
      }
      case FormulaKind::kForall:
        return run(negation(exists(f->variable, negation(f->children[0]))), scope);
      case FormulaKind::kExists:
      case FormulaKind::kCount:
        return quantifier(f, scope);
    }
    throw InvalidArgument("reduce_union: unhandled formula");
  }

 private:
  int location(const std::string& t, const std::map<std::string, Block>& scope) const {
    auto it = scope.find(t);
    if (it != scope.end()) return static_cast<int>(it->second);
    if (vocab_.constant_index(t)) throw InvalidArgument("reduce_union does not support constant symbols");
    throw InvalidArgument("free variable '" + t + "' is not declared");
  }

  // The block shared by all terms, or 0 when they are split.
  int common_side(const Formula& f, const std::map<std::string, Block>& scope) const {
    int side = -1;
    for (const auto& t : f->terms) {
      const int s = location(t, scope);
      if (side == -1) {
        side = s;
      } else if (side != s) {
        side = 0;
      }
    }
    return side;
  }

  static ReductionSequence on_side(int side, const Formula& f) {
    ReductionSequence rs;
    (side == 1 ? rs.left : rs.right).push_back(f);
    rs.combiner = c_var(side, 0);
    return rs;
  }

  ReductionSequence quantifier(const Formula& f, std::map<std::string, Block>& scope) {
    const std::string& x = f->variable;
    const bool counting = f->kind == FormulaKind::kCount;
    Builder builder;
    std::vector<Combiner> disjuncts;
    std::vector<std::vector<ResidueOption>> items;
    for (int side : {1, 2}) {
      // x ranges over this block: reduce with x placed there.
      auto saved = scope.find(x);
      const bool had = saved != scope.end();
      const Block previous = had ? saved->second : Block::kLeft;
      scope[x] = static_cast<Block>(side);
      const ReductionSequence child = run(f->children[0], scope);
      if (had) {
        scope[x] = previous;
      } else {
        scope.erase(x);
      }

      const auto& list = side == 1 ? child.left : child.right;
      check_table(list.size());
      // Import the other block's formulas; the guard below refers to them.
      std::vector<int> own_map, other_map;
      for (const auto& g : side == 1 ? child.right : child.left) other_map.push_back(builder.add(3 - side, g));
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << list.size()); ++c) {
        const Combiner rest = restrict_side(child.combiner, side, bits_of(c, list.size()));
        if (rest->kind == CombinerKind::kConst && !rest->value) continue;
        const Combiner guard = side == 1 ? remap(rest, own_map, other_map) : remap(rest, other_map, own_map);
        const Formula a = alpha(list, c);
        if (!counting) {
          disjuncts.push_back(c_and(c_var(side, builder.add(side, exists(x, a))), guard));
          continue;
        }
        std::vector<ResidueOption> options;
        for (int q = 0; q < f->modulus; ++q) {
          options.push_back({q, c_and(guard, c_var(side, builder.add(side, count(f->modulus, q, x, a))))});
        }
        options.push_back({0, c_not(guard)});
        items.push_back(std::move(options));
      }
    }
    if (!counting) return builder.finish(c_or(std::move(disjuncts)));
    return builder.finish(c_residue("MODSUM", f->modulus, f->residue, std::move(items)));
  }

  const Vocabulary& vocab_;
};

}  // namespace

ReductionSequence reduce_product(const Formula& phi, const Vocabulary& vocab,
                                 const std::vector<std::string>& free_variables) {
  std::set<std::string> scope(free_variables.begin(), free_variables.end());
  return ProductReducer(vocab).run(phi, scope);
}

ReductionSequence reduce_union(const Formula& phi, const Vocabulary& vocab,
                               const std::map<std::string, Block>& free_variables) {
  if (!vocab.constants().empty()) throw InvalidArgument("reduce_union does not support constant symbols");
  if (vocab.relation_index("PA") || vocab.relation_index("PB")) {
    throw InvalidArgument("reduce_union: PA and PB are reserved for the block predicates");
  }
  auto scope = free_variables;
  return UnionReducer(vocab).run(phi, scope);
}

ReductionSequence reduce(FvOperation op, const Formula& phi, const Vocabulary& vocab) {
  return op == FvOperation::kProduct ? reduce_product(phi, vocab) : reduce_union(phi, vocab);
}

bool eval_via_reduction(const ReductionSequence& rs, const Structure& a, const Structure& b,
                        const Assignment& sigma_a, const Assignment& sigma_b) {
  std::vector<bool> left, right;
  for (const auto& f : rs.left) left.push_back(eval(f, a, sigma_a));
  for (const auto& f : rs.right) right.push_back(eval(f, b, sigma_b));
  return eval_combiner(rs.combiner, left, right);
}

std::string to_string(const ReductionSequence& rs) {
  std::ostringstream out;
  out << "left (" << rs.left.size() << "):\n";
  for (std::size_t i = 0; i < rs.left.size(); ++i) out << "  b1_" << i + 1 << " := " << to_string(rs.left[i]) << "\n";
  out << "right (" << rs.right.size() << "):\n";
  for (std::size_t i = 0; i < rs.right.size(); ++i) out << "  b2_" << i + 1 << " := " << to_string(rs.right[i]) << "\n";
  out << "combiner: " << to_string(rs.combiner) << "\n";
  out << "sequence length: " << rs.length() << "\n";
  out << "combiner nodes: " << node_count(rs.combiner) << "\n";
  out << "expanded combiner nodes: " << expanded_node_count(rs.combiner).get_str() << "\n";
  return out.str();
}

}  // namespace conmat
