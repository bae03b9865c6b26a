// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <variant>

#include "conmat/exact/polynomial.hpp"

namespace conmat {

enum class ValueKind { kBoolean, kInteger, kRational, kPolynomial, kRationalFunction };

std::string to_string(ValueKind kind);

// Tagged exact scalar: the codomain of every invariant and the entry type of
// connection matrices.
class Value {
 public:
  Value() : v_(false) {}
  Value(bool b) : v_(b) {}                                    // NOLINT
  Value(const BigInt& z) : v_(z) {}                           // NOLINT
  Value(int z) : v_(BigInt(z)) {}                             // NOLINT
  Value(long z) : v_(BigInt(z)) {}                            // NOLINT
  Value(const Rational& q) : v_(canonical(q)) {}              // NOLINT
  Value(const Polynomial& p) : v_(p) {}                       // NOLINT
  Value(const RationalFunction& f) : v_(f) {}                 // NOLINT

  ValueKind kind() const { return static_cast<ValueKind>(v_.index()); }

  bool as_bool() const;
  const BigInt& as_integer() const;
  const Rational& as_rational() const;
  const Polynomial& as_polynomial() const;
  const RationalFunction& as_rational_function() const;

  // True for false, 0, 0/1 and the zero polynomial / function.
  bool is_zero() const;

  // Exact text form: "true"/"false", integers, "p/q", polynomial strings in
  // the indeterminate `var`.
  std::string to_string(const std::string& var = "X") const;

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  static Rational canonical(Rational q) {
    q.canonicalize();
    return q;
  }

  std::variant<bool, BigInt, Rational, Polynomial, RationalFunction> v_;
};

}  // namespace conmat
