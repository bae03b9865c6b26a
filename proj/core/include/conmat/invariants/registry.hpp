// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conmat/exact/value.hpp"
#include "conmat/structures/graph.hpp"

namespace conmat {

enum class InvariantKind { kProperty, kNumber, kPolynomial };

std::string to_string(InvariantKind kind);

// A registered invariant with its parameters, written `name`, `name@p1` or
// `name@p1,p2`; properties may be negated with the prefix `not:`.
// Examples: "hamiltonian", "p_coloring@planar,3", "not:acyclic", "mcc@2,3".
struct InvariantId {
  std::string name;
  std::vector<std::string> params;
  bool negated = false;

  std::string to_string() const;
};

InvariantId parse_invariant_id(const std::string& text);

struct InvariantInfo {
  std::string name;
  InvariantKind kind;
  std::string params;       // e.g. "k" or "t,k"; empty when none
  std::string description;
};

// Every registered invariant, sorted by name.
const std::vector<InvariantInfo>& registered_invariants();
const InvariantInfo& invariant_info(const std::string& name);

// Evaluates any registered invariant. Properties give Booleans, numbers give
// integers or rationals, polynomials give polynomials in X. Throws
// InvalidArgument for unknown ids or bad parameters and BoundExceeded from
// guarded evaluators.
Value evaluate(const InvariantId& id, const Graph& g);
Value evaluate(const std::string& id, const Graph& g);

// Kind-checked entry points.
bool eval_bool(const InvariantId& prop, const Graph& g);
Value eval_number(const InvariantId& num, const Graph& g);
// Polynomial symbolically, or its value at `at` when given.
Value eval_poly(const InvariantId& poly, const Graph& g, std::optional<long> at = std::nullopt);

InvariantKind invariant_kind(const InvariantId& id);

}  // namespace conmat
