// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <string>

#include "conmat/invariants/polynomials.hpp"
#include "conmat/invariants/registry.hpp"
#include "conmat/invariants/treewidth.hpp"
#include "conmat/structures/families.hpp"

namespace {

conmat::Graph family(const std::string& kind, int n) {
  return conmat::generate(conmat::parse_family_id(kind + "(" + std::to_string(n) + ")")).unlabeled();
}

void BM_ChromaticPolynomialCycle(benchmark::State& state) {
  const conmat::Graph g = family("Cycle", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conmat::chromatic_polynomial(g));
}
BENCHMARK(BM_ChromaticPolynomialCycle)->Arg(6)->Arg(10)->Arg(14);

void BM_TreewidthClique(benchmark::State& state) {
  const conmat::Graph g = family("Clique", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conmat::treewidth(g));
}
BENCHMARK(BM_TreewidthClique)->Arg(6)->Arg(10);

void BM_EvaluateHamiltonian(benchmark::State& state) {
  const conmat::Graph g = family("Cycle", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conmat::evaluate("hamiltonian", g));
}
BENCHMARK(BM_EvaluateHamiltonian)->Arg(8)->Arg(12)->Arg(16);

void BM_EvaluateProperColorings(benchmark::State& state) {
  const conmat::Graph g = family("Path", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conmat::evaluate("proper@3", g));
}
BENCHMARK(BM_EvaluateProperColorings)->Arg(6)->Arg(10);

}  // namespace
