// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/structures/structure.hpp"

#include <algorithm>
#include <cctype>

#include "conmat/common/error.hpp"

namespace conmat {

namespace {

bool valid_symbol(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

}  // namespace

Vocabulary::Vocabulary(std::vector<RelationSymbol> relations,
                       std::vector<std::string> constants, bool ordered)
    : relations_(std::move(relations)), constants_(std::move(constants)), ordered_(ordered) {
  std::set<std::string> seen;
  for (const auto& r : relations_) {
    if (!valid_symbol(r.name)) throw InvalidArgument("invalid relation symbol '" + r.name + "'");
    if (r.arity < 1) throw InvalidArgument("relation '" + r.name + "' must have arity >= 1");
    if (!seen.insert(r.name).second) throw InvalidArgument("duplicate symbol '" + r.name + "'");
  }
  for (const auto& c : constants_) {
    if (!valid_symbol(c)) throw InvalidArgument("invalid constant symbol '" + c + "'");
    if (!seen.insert(c).second) throw InvalidArgument("duplicate symbol '" + c + "'");
  }
}

std::optional<std::size_t> Vocabulary::relation_index(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Vocabulary::constant_index(std::string_view name) const {
  for (std::size_t i = 0; i < constants_.size(); ++i) {
    if (constants_[i] == name) return i;
  }
  return std::nullopt;
}

Vocabulary Vocabulary::with_relations(const std::vector<RelationSymbol>& extra) const {
  auto rels = relations_;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return Vocabulary(std::move(rels), constants_, ordered_);
}

Vocabulary Vocabulary::with_constants(const std::vector<std::string>& constants) const {
  return Vocabulary(relations_, constants, ordered_);
}

Vocabulary Vocabulary::with_ordered(bool ordered) const {
  return Vocabulary(relations_, constants_, ordered);
}

std::string Vocabulary::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& r : relations_) {
    out += (first ? "" : ", ") + r.name + "/" + std::to_string(r.arity);
    first = false;
  }
  for (const auto& c : constants_) {
    out += (first ? "" : ", ") + c;
    first = false;
  }
  if (ordered_) out += first ? "<" : ", <";
  return out + "}";
}

bool Structure::holds(std::size_t rel, const int* tuple) const {
  const Relation& r = relations_[rel];
  if (!r.dense.empty() || r.tuples.empty()) {
    if (r.tuples.empty()) return false;
    std::size_t index = 0;
    for (int k = 0; k < r.arity; ++k) index = index * n_ + tuple[k];
    return r.dense[index] != 0;
  }
  return r.sparse.count(Tuple(tuple, tuple + r.arity)) > 0;
}

bool operator==(const Structure& a, const Structure& b) {
  if (a.n_ != b.n_ || !(a.vocab_ == b.vocab_) || a.constants_ != b.constants_) return false;
  for (std::size_t i = 0; i < a.relations_.size(); ++i) {
    if (a.relations_[i].tuples != b.relations_[i].tuples) return false;
  }
  return true;
}

Structure make_structure(const Vocabulary& vocab, int n,
                         const std::map<std::string, std::vector<Tuple>>& relation_tuples,
                         const std::map<std::string, int>& constants) {
  if (n < 0) throw InvalidArgument("negative universe size");
  Structure s;
  s.vocab_ = vocab;
  s.n_ = n;
  s.relations_.resize(vocab.relations().size());
  for (std::size_t i = 0; i < vocab.relations().size(); ++i) {
    s.relations_[i].arity = vocab.relations()[i].arity;
  }
  for (const auto& [name, tuples] : relation_tuples) {
    auto idx = vocab.relation_index(name);
    if (!idx) throw InvalidArgument("unknown relation symbol '" + name + "'");
    Structure::Relation& rel = s.relations_[*idx];
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != rel.arity) {
        throw InvalidArgument("arity mismatch for '" + name + "': expected " +
                              std::to_string(rel.arity) + ", got " + std::to_string(t.size()));
      }
      for (int e : t) {
        if (e < 0 || e >= n) {
          throw InvalidArgument("element " + std::to_string(e) + " out of range for universe of size " +
                                std::to_string(n) + " in relation '" + name + "'");
        }
      }
      rel.tuples.push_back(t);
    }
  }
  for (auto& rel : s.relations_) {
    std::sort(rel.tuples.begin(), rel.tuples.end());
    rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    if (rel.tuples.empty()) continue;
    std::size_t cells = 1;
    bool small = true;
    for (int k = 0; k < rel.arity; ++k) {
      cells *= static_cast<std::size_t>(n);
      if (cells > kDenseLimit) {
        small = false;
        break;
      }
    }
    if (small) {
      rel.dense.assign(cells, 0);
      for (const auto& t : rel.tuples) {
        std::size_t index = 0;
        for (int e : t) index = index * n + e;
        rel.dense[index] = 1;
      }
    } else {
      rel.sparse.insert(rel.tuples.begin(), rel.tuples.end());
    }
  }
  s.constants_.assign(vocab.constants().size(), -1);
  for (const auto& [name, element] : constants) {
    auto idx = vocab.constant_index(name);
    if (!idx) throw InvalidArgument("unknown constant symbol '" + name + "'");
    if (element < 0 || element >= n) {
      throw InvalidArgument("constant '" + name + "' = " + std::to_string(element) + " out of range");
    }
    s.constants_[*idx] = element;
  }
  for (std::size_t i = 0; i < s.constants_.size(); ++i) {
    if (s.constants_[i] < 0) {
      throw InvalidArgument("constant '" + vocab.constants()[i] + "' is not assigned");
    }
  }
  return s;
}

}  // namespace conmat
