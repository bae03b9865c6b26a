// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace conmat {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense univariate polynomial with rational coefficients. The coefficient
// vector is stored lowest degree first and never has trailing zeros, so the
// zero polynomial has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by design
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  // c * X^degree.
  static Polynomial monomial(const Rational& c, std::size_t degree);
  // The indeterminate X.
  static Polynomial x() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const;
  Rational leading() const;

  Rational evaluate(const Rational& at) const;

  // Sum of the bit sizes of numerators and denominators; a cheap proxy for
  // coefficient growth used to rank elimination pivots.
  std::size_t height() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial* q,
                     Polynomial* r);
  // Division that must be exact; throws InvalidArgument otherwise.
  Polynomial exact_div(const Polynomial& divisor) const;

  // Ascending-degree text form, e.g. "1 + 2*X - 1/3*X^2"; "0" for zero.
  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Monic greatest common divisor (zero if both arguments are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Element of the rational-function field Q(X), kept as num/den with
// gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(const Polynomial& num);  // NOLINT: implicit by design
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::string& var = "X") const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace conmat
