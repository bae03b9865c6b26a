// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/exact/value.hpp"

#include "conmat/common/error.hpp"

namespace conmat {

std::string to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::kBoolean:
      return "boolean";
    case ValueKind::kInteger:
      return "integer";
    case ValueKind::kRational:
      return "rational";
    case ValueKind::kPolynomial:
      return "polynomial";
    case ValueKind::kRationalFunction:
      return "rational-function";
  }
  return "unknown";
}

namespace {

template <class T>
const T& get_or_throw(const auto& v, ValueKind actual, const char* wanted) {
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw MixedKinds(std::string("value of kind ") + to_string(actual) +
                   " used as " + wanted);
}

}  // namespace

bool Value::as_bool() const {
  return get_or_throw<bool>(v_, kind(), "boolean");
}

const BigInt& Value::as_integer() const {
  return get_or_throw<BigInt>(v_, kind(), "integer");
}

const Rational& Value::as_rational() const {
  return get_or_throw<Rational>(v_, kind(), "rational");
}

const Polynomial& Value::as_polynomial() const {
  return get_or_throw<Polynomial>(v_, kind(), "polynomial");
}

const RationalFunction& Value::as_rational_function() const {
  return get_or_throw<RationalFunction>(v_, kind(), "rational function");
}

bool Value::is_zero() const {
  switch (kind()) {
    case ValueKind::kBoolean:
      return !std::get<bool>(v_);
    case ValueKind::kInteger:
      return std::get<BigInt>(v_) == 0;
    case ValueKind::kRational:
      return std::get<Rational>(v_) == 0;
    case ValueKind::kPolynomial:
      return std::get<Polynomial>(v_).is_zero();
    case ValueKind::kRationalFunction:
      return std::get<RationalFunction>(v_).is_zero();
  }
  return false;
}

std::string Value::to_string(const std::string& var) const {
  switch (kind()) {
    case ValueKind::kBoolean:
      return std::get<bool>(v_) ? "true" : "false";
    case ValueKind::kInteger:
      return std::get<BigInt>(v_).get_str();
    case ValueKind::kRational:
      return std::get<Rational>(v_).get_str();
    case ValueKind::kPolynomial:
      return std::get<Polynomial>(v_).to_string(var);
    case ValueKind::kRationalFunction:
      return std::get<RationalFunction>(v_).to_string(var);
  }
  return "";
}

}  // namespace conmat
