// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/fv/combiner.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "conmat/common/error.hpp"

namespace conmat {

namespace {

Combiner make(CombinerNode node) { return std::make_shared<const CombinerNode>(std::move(node)); }

Combiner join_children(CombinerKind kind, std::vector<Combiner> children) {
  const bool absorbing = kind == CombinerKind::kOr;  // true absorbs Or, false absorbs And
  std::vector<Combiner> kept;
  for (auto& c : children) {
    if (c->kind == CombinerKind::kConst) {
      if (c->value == absorbing) return c_const(absorbing);
      continue;
    }
    if (c->kind == kind) {
      kept.insert(kept.end(), c->children.begin(), c->children.end());
    } else {
      kept.push_back(std::move(c));
    }
  }
  if (kept.empty()) return c_const(!absorbing);
  if (kept.size() == 1) return kept.front();
  CombinerNode node;
  node.kind = kind;
  node.children = std::move(kept);
  return make(std::move(node));
}

}  // namespace

Combiner c_const(bool value) {
  static const Combiner kTrue = [] {
    CombinerNode node;
    node.value = true;
    return make(std::move(node));
  }();
  static const Combiner kFalse = make(CombinerNode{});
  return value ? kTrue : kFalse;
}

Combiner c_var(int side, int index) {
  if ((side != 1 && side != 2) || index < 0) throw InvalidArgument("combiner variable out of range");
  CombinerNode node;
  node.kind = CombinerKind::kVar;
  node.side = side;
  node.index = index;
  return make(std::move(node));
}

Combiner c_not(Combiner c) {
  if (c->kind == CombinerKind::kConst) return c_const(!c->value);
  if (c->kind == CombinerKind::kNot) return c->children[0];
  CombinerNode node;
  node.kind = CombinerKind::kNot;
  node.children = {std::move(c)};
  return make(std::move(node));
}

Combiner c_and(std::vector<Combiner> children) { return join_children(CombinerKind::kAnd, std::move(children)); }
Combiner c_or(std::vector<Combiner> children) { return join_children(CombinerKind::kOr, std::move(children)); }
Combiner c_and(Combiner a, Combiner b) { return c_and(std::vector<Combiner>{std::move(a), std::move(b)}); }
Combiner c_or(Combiner a, Combiner b) { return c_or(std::vector<Combiner>{std::move(a), std::move(b)}); }

Combiner c_residue(std::string label, int modulus, int target,
                   std::vector<std::vector<ResidueOption>> items) {
  if (modulus < 2 || modulus > 63 || target < 0 || target >= modulus) {
    throw InvalidArgument("residue family needs 2 <= m <= 63 and 0 <= target < m");
  }
  std::vector<std::vector<ResidueOption>> kept;
  for (auto& item : items) {
    std::vector<ResidueOption> options;
    for (auto& option : item) {
      if (option.residue < 0 || option.residue >= modulus) {
        throw InvalidArgument("residue option out of range");
      }
      if (option.clause->kind == CombinerKind::kConst && !option.clause->value) continue;
      options.push_back(std::move(option));
    }
    if (options.empty()) return c_const(false);
    kept.push_back(std::move(options));
  }
  if (kept.empty()) return c_const(target == 0);
  CombinerNode node;
  node.kind = CombinerKind::kResidue;
  node.label = std::move(label);
  node.modulus = modulus;
  node.target = target;
  node.items = std::move(kept);
  return make(std::move(node));
}

namespace {

class Evaluator {
 public:
  Evaluator(const std::vector<bool>& left, const std::vector<bool>& right) : left_(left), right_(right) {}

  bool run(const Combiner& c) {
    auto it = memo_.find(c.get());
    if (it != memo_.end()) return it->second;
    bool value = false;
    switch (c->kind) {
      case CombinerKind::kConst:
        value = c->value;
        break;
      case CombinerKind::kVar: {
        const auto& v = c->side == 1 ? left_ : right_;
        if (c->index >= static_cast<int>(v.size())) {
          throw InvalidArgument("combiner references b" + std::to_string(c->side) + "_" +
                                std::to_string(c->index + 1) + " beyond the truth vector");
        }
        value = v[c->index];
        break;
      }
      case CombinerKind::kNot:
        value = !run(c->children[0]);
        break;
      case CombinerKind::kAnd:
        value = true;
        for (const auto& child : c->children) {
          if (!run(child)) {
            value = false;
            break;
          }
        }
        break;
      case CombinerKind::kOr:
        for (const auto& child : c->children) {
          if (run(child)) {
            value = true;
            break;
          }
        }
        break;
      case CombinerKind::kResidue: {
        // Bit r of `reachable`: some choice on the items so far sums to r.
        const int m = c->modulus;
        const std::uint64_t all = (std::uint64_t{1} << m) - 1;
        std::uint64_t reachable = 1;
        for (const auto& item : c->items) {
          std::uint64_t next = 0;
          for (const auto& option : item) {
            if (!run(option.clause)) continue;
            const int r = option.residue;
            next |= ((reachable << r) | (reachable >> (m - r))) & all;
          }
          reachable = next;
          if (reachable == 0) break;
        }
        value = ((reachable >> c->target) & 1) != 0;
        break;
      }
    }
    memo_.emplace(c.get(), value);
    return value;
  }

 private:
  const std::vector<bool>& left_;
  const std::vector<bool>& right_;
  std::unordered_map<const CombinerNode*, bool> memo_;
};

// Bottom-up rebuild with a per-node memo; `leaf` maps variables.
Combiner rebuild(const Combiner& c, const std::function<Combiner(const CombinerNode&)>& leaf,
                 std::unordered_map<const CombinerNode*, Combiner>& memo) {
  auto it = memo.find(c.get());
  if (it != memo.end()) return it->second;
  Combiner out;
  switch (c->kind) {
    case CombinerKind::kConst:
      out = c;
      break;
    case CombinerKind::kVar:
      out = leaf(*c);
      break;
    case CombinerKind::kNot:
      out = c_not(rebuild(c->children[0], leaf, memo));
      break;
    case CombinerKind::kAnd:
    case CombinerKind::kOr: {
      std::vector<Combiner> children;
      for (const auto& child : c->children) children.push_back(rebuild(child, leaf, memo));
      out = c->kind == CombinerKind::kAnd ? c_and(std::move(children)) : c_or(std::move(children));
      break;
    }
    case CombinerKind::kResidue: {
      auto items = c->items;
      for (auto& item : items) {
        for (auto& option : item) option.clause = rebuild(option.clause, leaf, memo);
      }
      out = c_residue(c->label, c->modulus, c->target, std::move(items));
      break;
    }
  }
  memo.emplace(c.get(), out);
  return out;
}

}  // namespace

bool eval_combiner(const Combiner& c, const std::vector<bool>& left, const std::vector<bool>& right) {
  return Evaluator(left, right).run(c);
}

Combiner restrict_side(const Combiner& c, int side, const std::vector<bool>& values) {
  std::unordered_map<const CombinerNode*, Combiner> memo;
  return rebuild(
      c,
      [&](const CombinerNode& v) -> Combiner {
        if (v.side != side) return c_var(v.side, v.index);
        if (v.index >= static_cast<int>(values.size())) throw InvalidArgument("restrict_side: missing value");
        return c_const(values[v.index]);
      },
      memo);
}

Combiner remap(const Combiner& c, const std::vector<int>& left_map, const std::vector<int>& right_map) {
  std::unordered_map<const CombinerNode*, Combiner> memo;
  return rebuild(
      c,
      [&](const CombinerNode& v) -> Combiner {
        const auto& map = v.side == 1 ? left_map : right_map;
        if (v.index >= static_cast<int>(map.size())) throw InvalidArgument("remap: index without image");
        return c_var(v.side, map[v.index]);
      },
      memo);
}

namespace {

Combiner expand_rec(const Combiner& c, std::size_t max_choices,
                    std::unordered_map<const CombinerNode*, Combiner>& memo) {
  auto it = memo.find(c.get());
  if (it != memo.end()) return it->second;
  Combiner out;
  switch (c->kind) {
    case CombinerKind::kConst:
    case CombinerKind::kVar:
      out = c;
      break;
    case CombinerKind::kNot:
      out = c_not(expand_rec(c->children[0], max_choices, memo));
      break;
    case CombinerKind::kAnd:
    case CombinerKind::kOr: {
      std::vector<Combiner> children;
      for (const auto& child : c->children) children.push_back(expand_rec(child, max_choices, memo));
      out = c->kind == CombinerKind::kAnd ? c_and(std::move(children)) : c_or(std::move(children));
      break;
    }
    case CombinerKind::kResidue: {
      std::size_t total = 1;
      for (const auto& item : c->items) {
        if (total > max_choices / item.size()) {
          throw BoundExceeded("expand: residue family " + c->label + " has too many choices");
        }
        total *= item.size();
      }
      std::vector<std::vector<Combiner>> clauses(c->items.size());
      for (std::size_t j = 0; j < c->items.size(); ++j) {
        for (const auto& option : c->items[j]) clauses[j].push_back(expand_rec(option.clause, max_choices, memo));
      }
      std::vector<Combiner> disjuncts;
      std::vector<std::size_t> choice(c->items.size(), 0);
      while (true) {
        int sum = 0;
        for (std::size_t j = 0; j < choice.size(); ++j) sum += c->items[j][choice[j]].residue;
        if (sum % c->modulus == c->target) {
          std::vector<Combiner> conjuncts;
          for (std::size_t j = 0; j < choice.size(); ++j) conjuncts.push_back(clauses[j][choice[j]]);
          disjuncts.push_back(c_and(std::move(conjuncts)));
        }
        std::size_t j = choice.size();
        while (j > 0 && ++choice[j - 1] == c->items[j - 1].size()) choice[--j] = 0;
        if (j == 0) break;
      }
      out = c_or(std::move(disjuncts));
      break;
    }
  }
  memo.emplace(c.get(), out);
  return out;
}

void collect(const Combiner& c, std::unordered_set<const CombinerNode*>& seen) {
  if (!seen.insert(c.get()).second) return;
  for (const auto& child : c->children) collect(child, seen);
  for (const auto& item : c->items) {
    for (const auto& option : item) collect(option.clause, seen);
  }
}

BigInt expanded_size(const Combiner& c, std::unordered_map<const CombinerNode*, BigInt>& memo) {
  auto it = memo.find(c.get());
  if (it != memo.end()) return it->second;
  BigInt size = 1;
  for (const auto& child : c->children) size += expanded_size(child, memo);
  if (c->kind == CombinerKind::kResidue) {
    // Per residue: number of choices reaching it and their summed clause sizes.
    const int m = c->modulus;
    std::vector<BigInt> count(m, 0), total(m, 0);
    count[0] = 1;
    for (const auto& item : c->items) {
      std::vector<BigInt> next_count(m, 0), next_total(m, 0);
      for (const auto& option : item) {
        const BigInt s = expanded_size(option.clause, memo);
        for (int r = 0; r < m; ++r) {
          const int q = (r + option.residue) % m;
          next_count[q] += count[r];
          next_total[q] += total[r] + count[r] * s;
        }
      }
      count = std::move(next_count);
      total = std::move(next_total);
    }
    // One Or node, one And node per choice, plus the clauses.
    size = 1 + count[c->target] + total[c->target];
  }
  memo.emplace(c.get(), size);
  return size;
}

std::string print(const Combiner& c, bool top) {
  switch (c->kind) {
    case CombinerKind::kConst:
      return c->value ? "true" : "false";
    case CombinerKind::kVar:
      return "b" + std::to_string(c->side) + "_" + std::to_string(c->index + 1);
    case CombinerKind::kNot:
      return "~" + print(c->children[0], false);
    case CombinerKind::kAnd:
    case CombinerKind::kOr: {
      std::string out = top ? "" : "(";
      for (std::size_t k = 0; k < c->children.size(); ++k) {
        if (k) out += c->kind == CombinerKind::kAnd ? " & " : " | ";
        out += print(c->children[k], false);
      }
      return out + (top ? "" : ")");
    }
    case CombinerKind::kResidue: {
      std::string out = c->label + "[" + std::to_string(c->modulus) + "," + std::to_string(c->target) + "]{";
      for (std::size_t j = 0; j < c->items.size(); ++j) {
        out += j ? "; " : " ";
        for (std::size_t k = 0; k < c->items[j].size(); ++k) {
          if (k) out += ", ";
          out += std::to_string(c->items[j][k].residue) + ":" + print(c->items[j][k].clause, false);
        }
      }
      return out + " }";
    }
  }
  return "?";
}

}  // namespace

Combiner expand(const Combiner& c, std::size_t max_choices) {
  std::unordered_map<const CombinerNode*, Combiner> memo;
  return expand_rec(c, max_choices, memo);
}

std::size_t node_count(const Combiner& c) {
  std::unordered_set<const CombinerNode*> seen;
  collect(c, seen);
  return seen.size();
}

BigInt expanded_node_count(const Combiner& c) {
  std::unordered_map<const CombinerNode*, BigInt> memo;
  return expanded_size(c, memo);
}

int referenced_width(const Combiner& c, int side) {
  std::unordered_set<const CombinerNode*> seen;
  collect(c, seen);
  int width = 0;
  for (const auto* node : seen) {
    if (node->kind == CombinerKind::kVar && node->side == side) width = std::max(width, node->index + 1);
  }
  return width;
}

std::string to_string(const Combiner& c) { return print(c, true); }

}  // namespace conmat
