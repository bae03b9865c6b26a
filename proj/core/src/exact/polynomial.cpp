// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/exact/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "conmat/common/error.hpp"

namespace conmat {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Polynomial p;
  if (c == 0) return p;
  p.coeffs_.assign(degree + 1, Rational(0));
  p.coeffs_[degree] = c;
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

std::size_t Polynomial::height() const {
  std::size_t h = 0;
  for (const auto& c : coeffs_) {
    h += mpz_sizeinbase(c.get_num_mpz_t(), 2) +
         mpz_sizeinbase(c.get_den_mpz_t(), 2);
  }
  return h;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1,
                            Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b,
                        Polynomial* q, Polynomial* r) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  Polynomial rem = a;
  std::vector<Rational> quot;
  if (a.degree() >= b.degree()) {
    quot.assign(a.degree() - b.degree() + 1, Rational(0));
  }
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = rem.degree() - b.degree();
    const Rational factor = rem.leading() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
      rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
    }
    rem.trim();
  }
  if (q != nullptr) *q = Polynomial(std::move(quot));
  if (r != nullptr) *r = std::move(rem);
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  Polynomial q, r;
  divmod(*this, divisor, &q, &r);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r;
    Polynomial::divmod(x, y, nullptr, &r);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * Polynomial(Rational(1) / x.leading());
}

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(1) {}

RationalFunction::RationalFunction(const Polynomial& num,
                                   const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  num_ = num_.exact_div(g);
  den_ = den_.exact_div(g);
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Polynomial scale(Rational(1) / lead);
    num_ *= scale;
    den_ *= scale;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw InvalidArgument("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == Polynomial(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace conmat
