// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "conmat/fv/corpus.hpp"
#include "conmat/fv/reduction.hpp"
#include "conmat/logic/formula.hpp"

namespace {

void BM_ReduceProductCorpus(benchmark::State& state) {
  const conmat::Vocabulary vocab = conmat::ordered_graph_vocabulary();
  std::vector<conmat::Formula> formulas;
  for (const auto& text : conmat::fv_product_corpus()) formulas.push_back(conmat::parse_formula(text));
  for (auto _ : state) {
    for (const auto& f : formulas) benchmark::DoNotOptimize(conmat::reduce(conmat::FvOperation::kProduct, f, vocab));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * formulas.size()));
}
BENCHMARK(BM_ReduceProductCorpus)->Unit(benchmark::kMillisecond);

void BM_ReduceUnionCorpus(benchmark::State& state) {
  const conmat::Vocabulary vocab = conmat::ordered_graph_vocabulary();
  std::vector<conmat::Formula> formulas;
  for (const auto& text : conmat::fv_union_corpus()) formulas.push_back(conmat::parse_formula(text));
  for (auto _ : state) {
    for (const auto& f : formulas) benchmark::DoNotOptimize(conmat::reduce(conmat::FvOperation::kUnion, f, vocab));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * formulas.size()));
}
BENCHMARK(BM_ReduceUnionCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
