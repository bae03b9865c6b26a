// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conmat/exact/value.hpp"

namespace conmat {

// Dense rectangular matrix of exact Values. Rows and columns carry free-form
// labels (the family members indexing a connection matrix).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Value& fill = Value(0));

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Value& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Value v) { data_[i * cols_ + j] = std::move(v); }

  std::vector<std::string>& row_labels() { return row_labels_; }
  std::vector<std::string>& col_labels() { return col_labels_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  // Leading n x n block (labels truncated accordingly).
  Matrix leading(std::size_t n) const;
  Matrix transpose() const;

  // The common kind of all entries; throws MixedKinds for a heterogeneous
  // matrix. An empty matrix reports kInteger.
  ValueKind entry_kind() const;

  // Exact CSV: header row of column labels, then one row per matrix row
  // starting with its label.
  std::string to_csv(const std::string& var = "X") const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Exact rank. Integer and rational matrices are eliminated over Z after
// clearing row denominators; polynomial and rational-function matrices are
// eliminated fraction-free in Q[X] (rank over Q(X)). Boolean entries count as
// 0/1. Throws MixedKinds for heterogeneous matrices.
std::size_t rank(const Matrix& m);

// r(N) = rank of the leading N x N block for N = 1..n_max.
std::vector<std::size_t> leading_rank_profile(const Matrix& m, std::size_t n_max);

// Exact integer determinant by Bareiss elimination.
BigInt determinant(std::vector<std::vector<BigInt>> a);

}  // namespace conmat
