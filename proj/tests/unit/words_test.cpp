// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "conmat/common/error.hpp"
#include "conmat/exactalg/matrix.hpp"
#include "conmat/words/words.hpp"

namespace conmat {
namespace {

TEST(Words, Concatenation) {
  EXPECT_EQ(concat("01", "10"), "0110");
  EXPECT_EQ(bar_concat("0", "1"), std::string("0") + kSeparator + "1");
}

TEST(Words, LengthLexEnumeration) {
  EXPECT_EQ(word_at(WordFamily::kAll, 0), "");
  EXPECT_EQ(word_at(WordFamily::kAll, 1), "0");
  EXPECT_EQ(word_at(WordFamily::kAll, 2), "1");
  EXPECT_EQ(word_at(WordFamily::kAll, 3), "00");
  EXPECT_EQ(word_at(WordFamily::kAll, 6), "11");
  EXPECT_EQ(word_at(WordFamily::kZeros, 3), "000");
  EXPECT_EQ(word_at(WordFamily::kOnes, 2), "11");
}

TEST(Words, L1Membership) {
  EXPECT_TRUE(in_l1(""));
  EXPECT_TRUE(in_l1("0011"));
  EXPECT_FALSE(in_l1("0101"));
  EXPECT_FALSE(in_l1("001"));
}

TEST(Words, FactorStatistics) {
  const Dfa zero_star = bundled_dfa("zero-star");
  EXPECT_EQ(longest_factor(zero_star, "0010001"), 3);
  EXPECT_EQ(longest_factor(zero_star, bar_concat("000", "00")), 3);
  EXPECT_EQ(word_length("0101"), 4);
  // Occurrences of nonempty factors in 0*: a block of length b contributes b(b+1)/2.
  EXPECT_EQ(factor_occurrences(zero_star, "00100"), 6);
  EXPECT_EQ(distinct_factors(zero_star, "00100"), 2);
}

TEST(Dfa, BundledLanguages) {
  const Dfa even = bundled_dfa("even-ones");
  EXPECT_TRUE(even.accepts(""));
  EXPECT_TRUE(even.accepts("0110"));
  EXPECT_FALSE(even.accepts("010"));
  const Dfa zo = bundled_dfa("zero-one-star");
  EXPECT_TRUE(zo.accepts("0101"));
  EXPECT_FALSE(zo.accepts("0110"));
  EXPECT_THROW(bundled_dfa("nope"), InvalidArgument);
  EXPECT_GE(bundled_dfa_names().size(), 3u);
}

TEST(Dfa, TextRoundTrip) {
  for (const auto& name : bundled_dfa_names()) {
    const Dfa d = bundled_dfa(name);
    const Dfa r = parse_dfa(d.to_text());
    for (int i = 0; i < 63; ++i) {
      const Word w = word_at(WordFamily::kAll, i);
      EXPECT_EQ(r.accepts(w), d.accepts(w)) << name << " " << w;
    }
  }
  EXPECT_THROW(parse_dfa("states 2\n"), Error);
}

TEST(Hankel, L1IsTheIdentity) {
  const Matrix m = word_hankel(parse_word_invariant("member@L1"), WordOp::kConcat, WordFamily::kZeros,
                               WordFamily::kOnes, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(m.at(i, j), Value(i == j ? 1 : 0));
  }
  EXPECT_EQ(rank(m), 6u);
}

TEST(Hankel, LengthHasRankTwo) {
  const Matrix m = word_hankel(parse_word_invariant("ell"), WordOp::kConcat, WordFamily::kZeros,
                               WordFamily::kZeros, 6, 1, 1);
  EXPECT_EQ(m.at(2, 3), Value(7));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Hankel, MaximalFactorUnderSeparatedConcatenation) {
  const Matrix m = word_hankel(parse_word_invariant("mL@zero-star"), WordOp::kBarConcat, WordFamily::kZeros,
                               WordFamily::kZeros, 6, 1, 1);
  EXPECT_EQ(m.at(1, 4), Value(5));
  EXPECT_EQ(rank(m), 6u);
}

TEST(Hankel, RegularLanguagesHaveBoundedRank) {
  for (const auto& name : bundled_dfa_names()) {
    const Dfa d = bundled_dfa(name);
    const Matrix m = word_hankel(parse_word_invariant("member@" + name), WordOp::kConcat, WordFamily::kAll,
                                 WordFamily::kAll, 20);
    EXPECT_LE(rank(m), static_cast<std::size_t>(d.states())) << name;
  }
  EXPECT_THROW(parse_word_invariant("member@nope"), InvalidArgument);
}

}  // namespace
}  // namespace conmat
