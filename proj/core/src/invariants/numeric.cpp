// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/numeric.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "conmat/common/error.hpp"
#include "conmat/exactalg/matrix.hpp"
#include "conmat/invariants/structural.hpp"

namespace conmat {

namespace {

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidArgument(std::string(what) + ": undirected graph expected");
}

void require_order(const Graph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceed the bound " + std::to_string(bound));
  }
}

constexpr int kMaxCyclomatic = 20;

}  // namespace

int apex_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == g.order() - 1;
  return count;
}

int odd_degree_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) % 2;
  return count;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

BigInt spanning_tree_count(const Graph& g) {
  require_undirected(g, "spanning trees");
  const int n = g.order();
  if (n <= 1) return 1;
  // Laplacian with the last row and column removed.
  std::vector<std::vector<BigInt>> lap(n - 1, std::vector<BigInt>(n - 1, 0));
  for (int v = 0; v + 1 < n; ++v) {
    lap[v][v] = g.degree(v);
    for (int u : g.neighbors(v)) {
      if (u + 1 < n) lap[v][u] = -1;
    }
  }
  return determinant(std::move(lap));
}

BigInt spanning_forest_count(const Graph& g) {
  BigInt product = 1;
  for (const auto& comp : components(g)) product *= spanning_tree_count(g.induced(comp).unlabeled());
  return product;
}

BigInt cycle_count(const Graph& g) {
  require_undirected(g, "cycle count");
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int cyclomatic = m - n + component_count(g);
  if (cyclomatic <= kMaxCyclomatic) {
    // Fundamental cycles of a BFS forest span the cycle space; a cycle-space
    // element is a simple cycle iff it is connected and 2-regular.
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<bool> tree_edge(m, false), seen(n, false);
    std::vector<std::vector<std::pair<int, int>>> incident(n);
    for (int e = 0; e < m; ++e) {
      incident[edges[e].first].emplace_back(edges[e].second, e);
      incident[edges[e].second].emplace_back(edges[e].first, e);
    }
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (const auto& [u, e] : incident[v]) {
          if (seen[u]) continue;
          seen[u] = true;
          parent[u] = v;
          parent_edge[u] = e;
          depth[u] = depth[v] + 1;
          tree_edge[e] = true;
          q.push(u);
        }
      }
    }
    std::vector<std::vector<bool>> basis;
    for (int e = 0; e < m; ++e) {
      if (tree_edge[e]) continue;
      std::vector<bool> cycle(m, false);
      cycle[e] = true;
      int a = edges[e].first, b = edges[e].second;
      while (a != b) {
        if (depth[a] < depth[b]) std::swap(a, b);
        cycle[parent_edge[a]] = true;
        a = parent[a];
      }
      basis.push_back(std::move(cycle));
    }
    const int c = static_cast<int>(basis.size());
    std::vector<bool> current(m, false);
    std::vector<int> degree(n);
    BigInt count = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << c); ++i) {
      const auto& flip = basis[__builtin_ctzll(i)];
      for (int e = 0; e < m; ++e) current[e] = current[e] != flip[e];
      std::fill(degree.begin(), degree.end(), 0);
      int used = 0, start = -1;
      for (int e = 0; e < m; ++e) {
        if (!current[e]) continue;
        ++used;
        ++degree[edges[e].first];
        ++degree[edges[e].second];
        start = edges[e].first;
      }
      bool simple = true;
      for (int v = 0; v < n && simple; ++v) simple = degree[v] == 0 || degree[v] == 2;
      if (!simple) continue;
      // Walk the cycle through `start` and compare its length with the set.
      int length = 0, prev = -1, at = start;
      do {
        int next = -1;
        for (const auto& [u, e] : incident[at]) {
          if (current[e] && u != prev) {
            next = u;
            break;
          }
        }
        prev = at;
        at = next;
        ++length;
      } while (at != start);
      if (length == used) ++count;
    }
    return count;
  }
  require_order(g, 20, "cycle count (dense)");
  BigInt twice = 0;
  std::vector<bool> on_path(n, false);
  std::function<void(int, int, int)> walk = [&](int s, int v, int length) {
    for (int u : g.neighbors(v)) {
      if (u == s && length >= 3) ++twice;
      if (u <= s || on_path[u]) continue;
      on_path[u] = true;
      walk(s, u, length + 1);
      on_path[u] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s, 1);
    on_path[s] = false;
  }
  return twice / 2;
}

int block_count(const Graph& g) { return static_cast<int>(block_decomposition(g).blocks.size()); }

int nontrivial_block_count(const Graph& g) {
  int count = 0;
  for (const auto& b : block_decomposition(g).blocks) count += b.size() >= 3;
  return count;
}

int max_component_count(const Graph& g) {
  std::size_t best = 0;
  int count = 0;
  for (const auto& comp : components(g)) {
    if (comp.size() > best) {
      best = comp.size();
      count = 1;
    } else if (comp.size() == best) {
      ++count;
    }
  }
  return count;
}

int clique_number(const Graph& g) {
  require_undirected(g, "clique number");
  const auto adj = adjacency_masks(g);
  int best = 0;
  std::function<void(std::uint64_t, std::uint64_t, int)> expand = [&](std::uint64_t p, std::uint64_t x,
                                                                      int size) {
    if (p == 0) {
      if (x == 0) best = std::max(best, size);
      return;
    }
    if (size + __builtin_popcountll(p) <= best) return;
    const int pivot = __builtin_ctzll(p | x);
    for (std::uint64_t cand = p & ~adj[pivot]; cand; cand &= cand - 1) {
      const int v = __builtin_ctzll(cand);
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(p & adj[v], x & adj[v], size + 1);
      p &= ~bit;
      x |= bit;
    }
  };
  const int n = g.order();
  expand(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, 0);
  return best;
}

int girth(const Graph& g) {
  require_undirected(g, "girth");
  const int n = g.order();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (parent[v] != u) {
          const int length = dist[u] + dist[v] + 1;
          if (best == 0 || length < best) best = length;
        }
      }
    }
  }
  return best;
}

int degeneracy(const Graph& g) {
  require_undirected(g, "degeneracy");
  const int n = g.order();
  std::vector<int> degree(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick == -1 || degree[v] < degree[pick])) pick = v;
    }
    best = std::max(best, degree[pick]);
    removed[pick] = true;
    for (int u : g.neighbors(pick)) {
      if (!removed[u]) --degree[u];
    }
  }
  return best;
}

int longest_path(const Graph& g) {
  require_undirected(g, "longest path");
  require_order(g, 18, "longest path");
  const int n = g.order();
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  // ends[mask]: vertices at which some path covering exactly mask ends.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  int best = 0;
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!ends[mask]) continue;
    best = std::max(best, __builtin_popcount(mask) - 1);
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const int v = __builtin_ctz(e);
      for (std::uint64_t next = adj[v] & ~std::uint64_t{mask}; next; next &= next - 1) {
        const int w = __builtin_ctzll(next);
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return best;
}

int circumference(const Graph& g) {
  require_undirected(g, "circumference");
  require_order(g, 18, "circumference");
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  int best = 0;
  // Cycles through s as their smallest vertex: paths from s over larger vertices.
  for (int s = 0; s < n; ++s) {
    const int k = n - s;  // vertices s..n-1, local bit i = vertex s + i
    std::vector<std::uint32_t> ends(std::size_t{1} << k, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << k); mask += 2) {
      for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
        const int i = __builtin_ctz(e);
        const int v = s + i;
        if (__builtin_popcount(mask) >= 3 && (adj[v] >> s & 1)) {
          best = std::max(best, __builtin_popcount(mask));
        }
        for (std::uint64_t next = (adj[v] >> s) & ~std::uint64_t{mask}; next; next &= next - 1) {
          const int j = __builtin_ctzll(next);
          ends[mask | (1u << j)] |= 1u << j;
        }
      }
    }
  }
  return best;
}

// --- Means ---------------------------------------------------------------------

Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("average degree: graph without vertices");
  Rational q(2 * static_cast<long>(g.edge_count()), g.order());
  q.canonicalize();
  return q;
}

Rational quadratic_mean_degree_squared(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("quadratic mean: graph without vertices");
  BigInt sum = 0;
  for (int v = 0; v < g.order(); ++v) sum += BigInt(g.degree(v)) * g.degree(v);
  Rational q(sum, BigInt(g.order()));
  q.canonicalize();
  return q;
}

Rational harmonic_mean_degree(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("harmonic mean: graph without vertices");
  Rational sum = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw InvalidArgument("harmonic mean: graph has an isolated vertex");
    sum += Rational(1, g.degree(v));
  }
  Rational q = Rational(g.order()) / sum;
  q.canonicalize();
  return q;
}

Rational average_ball_size(const Graph& g, int i) {
  if (g.order() == 0) throw InvalidArgument("average ball size: graph without vertices");
  if (i < 0) throw InvalidArgument("average ball size: radius must be non-negative");
  const int n = g.order();
  long total = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      ++total;
      if (dist[v] == i) continue;
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
  }
  Rational q(total, n);
  q.canonicalize();
  return q;
}

Rational average_edge_incidence(const Graph& g) {
  require_undirected(g, "edge incidence");
  if (g.edge_count() == 0) throw InvalidArgument("edge incidence: graph without edges");
  long total = 0;
  for (const auto& [u, v] : g.edges()) total += g.degree(u) + g.degree(v) - 2;
  Rational q(total, static_cast<long>(g.edge_count()));
  q.canonicalize();
  return q;
}

}  // namespace conmat
