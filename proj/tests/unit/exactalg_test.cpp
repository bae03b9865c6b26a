// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <atomic>

#include "conmat/common/error.hpp"
#include "conmat/exactalg/connection.hpp"
#include "conmat/exactalg/matrix.hpp"

namespace conmat {
namespace {

Matrix make(std::size_t n, const std::function<Value(std::size_t, std::size_t)>& f) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f(i + 1, j + 1));
  }
  return m;
}

TEST(Rank, Identity) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(rank(make(n, [](std::size_t i, std::size_t j) { return Value(i == j ? 1 : 0); })), n);
  }
}

TEST(Rank, SumMatrixHasRankTwo) {
  EXPECT_EQ(rank(make(5, [](std::size_t i, std::size_t j) { return Value(static_cast<long>(i + j)); })), 2u);
}

TEST(Rank, CauchyMatrixIsFullRank) {
  EXPECT_EQ(rank(make(6, [](std::size_t i, std::size_t j) { return Value(Rational(1, static_cast<long>(i + j))); })),
            6u);
}

TEST(Rank, PolynomialVandermonde) {
  const Matrix m = make(5, [](std::size_t i, std::size_t j) {
    return Value(Polynomial::monomial(Rational(1), i * j));
  });
  EXPECT_EQ(rank(m), 5u);
  // X^{i+j} factors as X^i X^j: rank one.
  const Matrix r1 = make(5, [](std::size_t i, std::size_t j) {
    return Value(Polynomial::monomial(Rational(1), i + j));
  });
  EXPECT_EQ(rank(r1), 1u);
}

TEST(Rank, RationalAndPolynomialEntries) {
  Matrix m(2, 2);
  m.set(0, 0, Value(Rational(1, 3)));
  m.set(0, 1, Value(Rational(1, 2)));
  m.set(1, 0, Value(Rational(2, 3)));
  m.set(1, 1, Value(Rational(1, 1) + Rational(0, 1) + Rational(0, 1)));
  EXPECT_EQ(rank(m), 1u);
  Matrix p(2, 2);
  p.set(0, 0, Value(Polynomial::x()));
  p.set(0, 1, Value(Polynomial(1)));
  p.set(1, 0, Value(Polynomial::x() * Polynomial::x()));
  p.set(1, 1, Value(Polynomial::x()));
  EXPECT_EQ(rank(p), 1u);
}

TEST(Rank, MixedKindsAreRejected) {
  Matrix m(1, 2);
  m.set(0, 0, Value(1));
  m.set(0, 1, Value(Rational(1, 2)));
  EXPECT_THROW(rank(m), MixedKinds);
}

TEST(Rank, LeadingProfile) {
  const Matrix m = make(4, [](std::size_t i, std::size_t j) { return Value(i == j ? 0 : 1); });
  EXPECT_EQ(leading_rank_profile(m, 4), (std::vector<std::size_t>{0, 2, 3, 4}));
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant({{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1);
}

TEST(Expectations, Classification) {
  EXPECT_EQ(classify({1, 2, 3, 4}), "FullDiagonalGrowth");
  EXPECT_EQ(classify({0, 2, 3, 4}), "FullDiagonalGrowth(from 2)");
  EXPECT_EQ(classify({1, 2, 2, 2}), "Bounded(2)");
  EXPECT_EQ(classify({1, 1, 3, 4}), "AtLeast(N-1)");
  EXPECT_EQ(classify({1, 3, 4, 6}), "StrictlyIncreasing");
  EXPECT_TRUE(satisfies({1, 2, 2, 2}, bounded(2)));
  EXPECT_FALSE(satisfies({1, 2, 3, 3}, bounded(2)));
  EXPECT_FALSE(satisfies({1, 2, 2, 3}, bounded(3)));  // still growing at N_max
  EXPECT_TRUE(satisfies({1, 1, 1, 5, 5}, stabilizes(4)));
  EXPECT_TRUE(satisfies({1, 1, 3}, at_least_n_minus_1(3)));
  EXPECT_FALSE(satisfies({1, 1, 1}, at_least_n_minus_1(3)));
}

TEST(FamilySpecs, ParseAndPrint) {
  const FamilySpec a = parse_family_spec("Clique:2:2");
  EXPECT_EQ(to_string(a.member(2)), "Clique(6)");
  EXPECT_EQ(a.to_string(), "Clique:2:2");
  const FamilySpec b = parse_family_spec("list:Path(2);Clique(3)");
  EXPECT_EQ(b.available(), 2u);
  EXPECT_THROW(b.member(2), InvalidArgument);
  EXPECT_THROW(parse_family_spec("Clique"), InvalidArgument);
  EXPECT_THROW(parse_family_spec("Clique:a"), InvalidArgument);
  EXPECT_THROW(parse_family_spec("DirCycle:1"), InvalidArgument);
}

TEST(ConnectionMatrix, EntriesAreMemoized) {
  std::atomic<int> calls{0};
  ConnectionMatrix m([&](std::size_t i, std::size_t j) {
    ++calls;
    return Value(static_cast<long>(i * 10 + j));
  },
                     [](std::size_t i) { return std::to_string(i); },
                     [](std::size_t j) { return std::to_string(j); });
  const Matrix a = m.materialize(3, 3, 2);
  const Matrix b = m.materialize(3, 3, 1);
  EXPECT_EQ(calls.load(), 9);
  EXPECT_EQ(m.computed(), 9u);
  EXPECT_EQ(a.at(2, 1), Value(21));
  EXPECT_EQ(b.row_labels(), (std::vector<std::string>{"0", "1", "2"}));
}

TEST(ConnectionMatrix, ErrorsNameTheEntry) {
  ConnectionMatrix m([](std::size_t i, std::size_t) -> Value {
    if (i == 1) throw BoundExceeded("too big");
    return Value(1);
  },
                     [](std::size_t i) { return std::to_string(i); },
                     [](std::size_t j) { return std::to_string(j); });
  try {
    m.materialize(2, 1, 1);
    FAIL() << "expected BoundExceeded";
  } catch (const BoundExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("entry (1,0)"), std::string::npos);
  }
}

TEST(ConnectionMatrix, GraphMatrices) {
  const Matrix m = build_connection_matrix("join", "hamiltonian", parse_family_spec("Edgeless:2"),
                                           parse_family_spec("Edgeless:2"), 4, 1);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m.at(i, j), Value(i == j ? 1 : 0));
  }
  EXPECT_EQ(m.row_labels().front(), "Edgeless(2)");
  EXPECT_THROW(build_connection_matrix("join", "nope", parse_family_spec("Edgeless:2"),
                                       parse_family_spec("Edgeless:2"), 2),
               InvalidArgument);
  const RankProfile p = rank_profile(parse_gluing_op("disjoint_union"), parse_invariant_id("even_order"),
                                     parse_family_spec("Edgeless:1"), parse_family_spec("Edgeless:1"), 6,
                                     bounded(2));
  EXPECT_TRUE(p.pass);
  EXPECT_EQ(format_profile(p.ranks), "1,2,2,2,2,2");
}

TEST(Matrix, CsvExport) {
  Matrix m(1, 2);
  m.set(0, 0, Value(Rational(1, 2)));
  m.set(0, 1, Value(Polynomial::x()));
  m.row_labels() = {"r"};
  m.col_labels() = {"a", "b"};
  const std::string csv = m.to_csv();
  EXPECT_NE(csv.find("1/2"), std::string::npos);
  EXPECT_NE(csv.find("X"), std::string::npos);
}

}  // namespace
}  // namespace conmat
