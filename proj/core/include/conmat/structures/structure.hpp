// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace conmat {

using Tuple = std::vector<int>;

struct RelationSymbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

// Purely relational vocabulary with constant symbols and an optional
// distinguished linear order (written `<` in formulas).
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<RelationSymbol> relations,
             std::vector<std::string> constants, bool ordered);

  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<std::string>& constants() const { return constants_; }
  bool ordered() const { return ordered_; }

  std::optional<std::size_t> relation_index(std::string_view name) const;
  std::optional<std::size_t> constant_index(std::string_view name) const;

  // Copy with extra relations/constants appended or the order flag changed.
  Vocabulary with_relations(const std::vector<RelationSymbol>& extra) const;
  Vocabulary with_constants(const std::vector<std::string>& constants) const;
  Vocabulary with_ordered(bool ordered) const;

  std::string to_string() const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<RelationSymbol> relations_;
  std::vector<std::string> constants_;
  bool ordered_ = false;
};

// Finite structure over elements 0..n-1. When the vocabulary is ordered the
// order is the identity order on element indices. Immutable once built.
class Structure {
 public:
  Structure() = default;

  const Vocabulary& vocabulary() const { return vocab_; }
  int size() const { return n_; }

  // Sorted, duplicate-free tuples of relation `rel`.
  const std::vector<Tuple>& tuples(std::size_t rel) const { return relations_[rel].tuples; }
  bool holds(std::size_t rel, const int* tuple) const;
  bool holds(std::size_t rel, const Tuple& tuple) const { return holds(rel, tuple.data()); }
  int constant(std::size_t c) const { return constants_[c]; }
  const std::vector<int>& constants() const { return constants_; }

  friend bool operator==(const Structure& a, const Structure& b);

 private:
  friend Structure make_structure(const Vocabulary&, int,
                                  const std::map<std::string, std::vector<Tuple>>&,
                                  const std::map<std::string, int>&);

  struct Relation {
    int arity = 0;
    std::vector<Tuple> tuples;
    std::vector<std::uint8_t> dense;  // n^arity membership table when small
    std::set<Tuple> sparse;           // fallback for large tables
  };

  Vocabulary vocab_;
  int n_ = 0;
  std::vector<Relation> relations_;
  std::vector<int> constants_;
};

// Validated construction. Relations absent from `relation_tuples` are empty;
// every constant of the vocabulary must be assigned. Throws InvalidArgument on
// unknown symbols, arity mismatch, or out-of-range elements.
Structure make_structure(const Vocabulary& vocab, int n,
                         const std::map<std::string, std::vector<Tuple>>& relation_tuples,
                         const std::map<std::string, int>& constants = {});

}  // namespace conmat
