// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "conmat/exactalg/matrix.hpp"
#include "conmat/words/words.hpp"

namespace {

using conmat::Matrix;
using conmat::Rational;
using conmat::Value;

// Cauchy matrices 1/(i+j) are full rank and stress rational elimination.
void BM_RankCauchy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Value(Rational(1, static_cast<long>(i + j + 2))));
  }
  for (auto _ : state) benchmark::DoNotOptimize(conmat::rank(m));
}
BENCHMARK(BM_RankCauchy)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_RankInteger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Value(static_cast<long>((i * 7 + j * 13) % 11)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(conmat::rank(m));
}
BENCHMARK(BM_RankInteger)->Arg(8)->Arg(16)->Arg(32);

void BM_WordHankelRegular(benchmark::State& state) {
  const auto inv = conmat::parse_word_invariant("member@even-ones");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Matrix m = conmat::word_hankel(inv, conmat::WordOp::kConcat, conmat::WordFamily::kAll,
                                         conmat::WordFamily::kAll, n);
    benchmark::DoNotOptimize(conmat::rank(m));
  }
}
BENCHMARK(BM_WordHankelRegular)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
