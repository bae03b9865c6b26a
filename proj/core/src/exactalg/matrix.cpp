// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/exactalg/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "conmat/common/error.hpp"

namespace conmat {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Value& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::leading(std::size_t n) const {
  const std::size_t r = std::min(n, rows_);
  const std::size_t c = std::min(n, cols_);
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) out.set(i, j, at(i, j));
  }
  out.row_labels_.assign(row_labels_.begin(),
                         row_labels_.begin() + std::min(r, row_labels_.size()));
  out.col_labels_.assign(col_labels_.begin(),
                         col_labels_.begin() + std::min(c, col_labels_.size()));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  }
  out.row_labels_ = col_labels_;
  out.col_labels_ = row_labels_;
  return out;
}

ValueKind Matrix::entry_kind() const {
  if (data_.empty()) return ValueKind::kInteger;
  const ValueKind kind = data_.front().kind();
  for (const auto& v : data_) {
    if (v.kind() != kind) {
      throw MixedKinds("matrix mixes entries of kind " + to_string(kind) +
                       " and " + to_string(v.kind()));
    }
  }
  return kind;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Matrix::to_csv(const std::string& var) const {
  std::ostringstream out;
  out << "";
  for (std::size_t j = 0; j < cols_; ++j) {
    out << "," << csv_cell(j < col_labels_.size() ? col_labels_[j] : std::to_string(j));
  }
  out << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << csv_cell(i < row_labels_.size() ? row_labels_[i] : std::to_string(i));
    for (std::size_t j = 0; j < cols_; ++j) out << "," << csv_cell(at(i, j).to_string(var));
    out << "\n";
  }
  return out.str();
}

namespace {

// Ring adaptors for the generic fraction-free elimination.
struct IntegerRing {
  using T = BigInt;
  static bool is_zero(const T& a) { return a == 0; }
  static std::size_t size(const T& a) { return mpz_sizeinbase(a.get_mpz_t(), 2); }
  static T exact_div(const T& a, const T& b) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

struct PolynomialRing {
  using T = Polynomial;
  static bool is_zero(const T& a) { return a.is_zero(); }
  static std::size_t size(const T& a) {
    return static_cast<std::size_t>(a.degree()) * 1000000u + a.height();
  }
  static T exact_div(const T& a, const T& b) { return a.exact_div(b); }
};

// Bareiss elimination with full pivoting; returns the rank. With
// `determinant` non-null on a square matrix, stores the determinant.
template <class Ring>
std::size_t bareiss(std::vector<std::vector<typename Ring::T>> a,
                    typename Ring::T* determinant = nullptr) {
  using T = typename Ring::T;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  T previous = T(1);
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Choose the smallest nonzero pivot in the trailing block.
    std::size_t best_i = rows, best_j = cols, best_size = 0;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (Ring::is_zero(a[i][j])) continue;
        const std::size_t s = Ring::size(a[i][j]);
        if (best_i == rows || s < best_size) {
          best_i = i;
          best_j = j;
          best_size = s;
        }
      }
    }
    if (best_i == rows) break;
    if (best_i != k) {
      std::swap(a[best_i], a[k]);
      sign = -sign;
    }
    if (best_j != k) {
      for (auto& row : a) std::swap(row[best_j], row[k]);
      sign = -sign;
    }
    ++rank;
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        T t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = Ring::exact_div(t, previous);
      }
      a[i][k] = T(0);
    }
    previous = a[k][k];
  }
  if (determinant != nullptr) {
    if (rank < rows || rows != cols) {
      *determinant = T(0);
    } else {
      *determinant = sign > 0 ? previous : T(-previous);
    }
  }
  return rank;
}

BigInt lcm_of_denominators(const std::vector<Rational>& row) {
  BigInt l = 1;
  for (const auto& q : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  return l;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const ValueKind kind = m.entry_kind();
  switch (kind) {
    case ValueKind::kBoolean:
    case ValueKind::kInteger:
    case ValueKind::kRational: {
      std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const Value& v = m.at(i, j);
          if (kind == ValueKind::kBoolean) {
            row[j] = v.as_bool() ? 1 : 0;
          } else if (kind == ValueKind::kInteger) {
            row[j] = Rational(v.as_integer());
          } else {
            row[j] = v.as_rational();
          }
        }
        const BigInt scale = lcm_of_denominators(row);
        for (std::size_t j = 0; j < m.cols(); ++j) {
          Rational scaled = row[j] * scale;
          a[i][j] = scaled.get_num();
        }
      }
      return bareiss<IntegerRing>(std::move(a));
    }
    case ValueKind::kPolynomial:
    case ValueKind::kRationalFunction: {
      std::vector<std::vector<Polynomial>> a(m.rows(), std::vector<Polynomial>(m.cols()));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (kind == ValueKind::kPolynomial) {
          for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).as_polynomial();
          continue;
        }
        // Scale the row by the product of its denominators: rank over Q(X)
        // is unchanged by multiplying a row with a nonzero function.
        Polynomial common(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const Polynomial& d = m.at(i, j).as_rational_function().denominator();
          Polynomial g = gcd(common, d);
          common = common * d.exact_div(g);
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
          const RationalFunction& f = m.at(i, j).as_rational_function();
          a[i][j] = f.numerator() * common.exact_div(f.denominator());
        }
      }
      return bareiss<PolynomialRing>(std::move(a));
    }
  }
  return 0;
}

std::vector<std::size_t> leading_rank_profile(const Matrix& m, std::size_t n_max) {
  std::vector<std::size_t> profile;
  const std::size_t limit = std::min({n_max, m.rows(), m.cols()});
  for (std::size_t n = 1; n <= limit; ++n) profile.push_back(rank(m.leading(n)));
  return profile;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  if (a.empty()) return 1;
  for (const auto& row : a) {
    if (row.size() != a.size()) throw InvalidArgument("determinant of a non-square matrix");
  }
  BigInt det;
  bareiss<IntegerRing>(std::move(a), &det);
  return det;
}

}  // namespace conmat
