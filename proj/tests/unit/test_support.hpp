// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "conmat/structures/graph.hpp"

namespace conmat::testing {

// Every undirected graph on {0..n-1}, by edge bitmask over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

// All graphs with 1..max_n vertices.
inline std::vector<Graph> graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& g : all_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

// Reproducible G(n, p) samples.
inline std::vector<Graph> random_graphs(int n, int count, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<Graph> out;
  for (int c = 0; c < count; ++c) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Automorphisms by trying every permutation.
inline long brute_automorphisms(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u) {
      for (int v = 0; v < g.order() && ok; ++v) ok = g.has_edge(u, v) == g.has_edge(perm[u], perm[v]);
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace conmat::testing
