// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "conmat/common/error.hpp"
#include "conmat/invariants/structural.hpp"

namespace conmat {

namespace {

constexpr int kMaxKernel = 22;

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

bool is_clique(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  for (std::uint64_t f = s; f; f &= f - 1) {
    const int v = __builtin_ctzll(f);
    if ((s & ~(std::uint64_t{1} << v) & ~adj[v]) != 0) return false;
  }
  return true;
}

int degeneracy(std::vector<std::uint64_t> adj, std::uint64_t alive) {
  int best = 0;
  while (alive) {
    int pick = -1, low = 65;
    for (std::uint64_t f = alive; f; f &= f - 1) {
      const int v = __builtin_ctzll(f);
      const int d = popcount(adj[v] & alive);
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    alive &= ~(std::uint64_t{1} << pick);
  }
  return best;
}

// Exact treewidth of the subgraph on `kernel` (at most kMaxKernel vertices)
// by the subset recurrence TW(S) = min_v max(TW(S - v), |Q(S - v, v)|), where
// Q(S, v) are the vertices outside S + v reachable from v through S.
int kernel_treewidth(const std::vector<std::uint64_t>& adj, std::uint64_t kernel) {
  std::vector<int> verts;
  for (std::uint64_t f = kernel; f; f &= f - 1) verts.push_back(__builtin_ctzll(f));
  const int k = static_cast<int>(verts.size());
  std::vector<std::uint32_t> local(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (adj[verts[a]] >> verts[b] & 1) local[a] |= 1u << b;
    }
  }
  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  std::vector<std::int8_t> tw(std::size_t{1} << k, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    int best = 127;
    for (std::uint32_t f = s; f; f &= f - 1) {
      const int v = __builtin_ctz(f);
      const std::uint32_t rest = s & ~(1u << v);
      if (tw[rest] >= best) continue;
      // Component of v inside rest + v, then its outside neighbourhood.
      std::uint32_t comp = 1u << v, frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t g = frontier; g; g &= g - 1) next |= local[__builtin_ctz(g)];
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      std::uint32_t around = 0;
      for (std::uint32_t g = comp; g; g &= g - 1) around |= local[__builtin_ctz(g)];
      around &= full & ~rest & ~(1u << v);
      best = std::min(best, std::max<int>(tw[rest], popcount(around)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  return std::max<int>(0, tw[full]);
}

}  // namespace

int treewidth(const Graph& g) {
  if (g.directed()) throw InvalidArgument("treewidth: undirected graph expected");
  auto adj = adjacency_masks(g);
  const int n = g.order();
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  int low = degeneracy(adj, alive);
  if (!is_forest(g)) low = std::max(low, 2);

  bool changed = true;
  while (changed && alive) {
    changed = false;
    for (std::uint64_t f = alive; f; f &= f - 1) {
      const int v = __builtin_ctzll(f);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t nb = adj[v] & alive;
      const int d = popcount(nb);
      bool eliminate = false;
      if (is_clique(adj, nb)) {
        low = std::max(low, d);
        eliminate = true;
      } else if (d <= low) {
        for (std::uint64_t h = nb; h && !eliminate; h &= h - 1) {
          eliminate = is_clique(adj, nb & ~(std::uint64_t{1} << __builtin_ctzll(h)));
        }
      }
      if (!eliminate) continue;
      for (std::uint64_t h = nb; h; h &= h - 1) {
        const int u = __builtin_ctzll(h);
        adj[u] |= nb & ~(std::uint64_t{1} << u);
        adj[u] &= ~bit;
      }
      adj[v] = 0;
      alive &= ~bit;
      changed = true;
    }
  }
  if (alive == 0) return low;
  if (popcount(alive) > kMaxKernel) {
    throw BoundExceeded("treewidth: irreducible kernel of " + std::to_string(popcount(alive)) +
                        " vertices exceeds the bound " + std::to_string(kMaxKernel));
  }
  return std::max(low, kernel_treewidth(adj, alive));
}

bool treewidth_at_most(const Graph& g, int w) { return treewidth(g) <= w; }

}  // namespace conmat
