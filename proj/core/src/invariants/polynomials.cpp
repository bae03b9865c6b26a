// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/polynomials.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "conmat/common/error.hpp"
#include "conmat/invariants/planarity.hpp"
#include "conmat/invariants/structural.hpp"

namespace conmat {

namespace {

using u128 = unsigned __int128;

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidArgument(std::string(what) + ": undirected graph expected");
}

void require_order(const Graph& g, int bound, const char* what) {
  if (g.order() > bound) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceed the bound " + std::to_string(bound));
  }
}

void require_colors(int k) {
  if (k < 0) throw InvalidArgument("number of colors must be non-negative");
}

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

BigInt to_big(u128 x) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(x));
  return (hi << 64) + lo;
}

// k (k-1) ... (k-j+1) for a non-negative integer k.
BigInt falling(int k, int j) {
  BigInt r = 1;
  for (int i = 0; i < j; ++i) r *= k - i;
  return r;
}

// X (X-1) ... (X-n+1).
Polynomial falling_polynomial(int n) {
  Polynomial p(1L);
  for (int i = 0; i < n; ++i) p *= Polynomial::x() - Polynomial(static_cast<long>(i));
  return p;
}

bool is_clique_mask(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  for (std::uint64_t f = s; f; f &= f - 1) {
    const int v = __builtin_ctzll(f);
    if ((s & ~(std::uint64_t{1} << v) & ~adj[v]) != 0) return false;
  }
  return true;
}

// --- Chromatic polynomial -------------------------------------------------------

class Chromatic {
 public:
  Polynomial run(std::vector<std::uint64_t> adj, std::uint64_t alive) {
    if (++steps_ > kMaxSteps) {
      throw BoundExceeded("chromatic polynomial: deletion-contraction exceeded " +
                          std::to_string(kMaxSteps) + " steps");
    }
    const int n = popcount(alive);
    if (n == 0) return Polynomial(1L);
    // Components multiply.
    const std::uint64_t first = alive & -alive;
    std::uint64_t comp = first, frontier = first;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctzll(f)];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    if (comp != alive) return run(adj, comp) * run(adj, alive & ~comp);
    // A simplicial vertex of degree d contributes the factor (X - d).
    for (std::uint64_t f = alive; f; f &= f - 1) {
      const int v = __builtin_ctzll(f);
      const std::uint64_t nb = adj[v] & alive;
      if (is_clique_mask(adj, nb)) {
        const Polynomial factor = Polynomial::x() - Polynomial(static_cast<long>(popcount(nb)));
        return factor * run(adj, alive & ~(std::uint64_t{1} << v));
      }
    }
    // Deletion-contraction on an edge at a vertex of minimum degree.
    int u = -1;
    for (std::uint64_t f = alive; f; f &= f - 1) {
      const int v = __builtin_ctzll(f);
      if (u == -1 || popcount(adj[v] & alive) < popcount(adj[u] & alive)) u = v;
    }
    const int v = __builtin_ctzll(adj[u] & alive);
    const std::uint64_t ub = std::uint64_t{1} << u, vb = std::uint64_t{1} << v;
    auto deleted = adj;
    deleted[u] &= ~vb;
    deleted[v] &= ~ub;
    auto contracted = deleted;
    contracted[u] |= deleted[v] & alive;
    for (std::uint64_t f = deleted[v] & alive; f; f &= f - 1) {
      const int w = __builtin_ctzll(f);
      contracted[w] |= ub;
      contracted[w] &= ~vb;
    }
    contracted[v] = 0;
    return run(deleted, alive) - run(contracted, alive & ~vb);
  }

 private:
  static constexpr long kMaxSteps = 2000000;
  long steps_ = 0;
};

// --- Subset dynamic programming for class-local colorings --------------------

// Sum over j of k(k-1)...(k-j+1) times the number of partitions of the vertex
// set into j unordered nonempty good classes.
BigInt partition_count(int n, int k, const std::vector<bool>& good) {
  if (n == 0) return 1;
  const std::uint64_t all = full_mask(n);
  std::vector<u128> level(std::size_t{1} << n, 0), next(std::size_t{1} << n, 0);
  level[0] = 1;
  BigInt total = 0;
  const int levels = std::min(k, n);
  for (int j = 1; j <= levels; ++j) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint64_t s = 1; s <= all; ++s) {
      const std::uint64_t low = s & -s;
      const std::uint64_t rest = s & ~low;
      u128 sum = 0;
      // T = low + any subset of rest.
      for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint64_t t = sub | low;
        if (good[t]) sum += level[s & ~t];
        if (sub == 0) break;
      }
      next[s] = sum;
    }
    std::swap(level, next);
    total += falling(k, j) * to_big(level[all]);
  }
  return total;
}

// Same count when good(T) depends only on |T| (complete and edgeless graphs).
BigInt partition_count_by_size(int n, int k, const std::vector<bool>& size_good) {
  if (n == 0) return 1;
  // binom[a][b]
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
  }
  // q[s]: partitions of s labelled vertices into j good blocks (current j).
  std::vector<BigInt> q(n + 1, 0), next(n + 1, 0);
  q[0] = 1;
  BigInt total = 0;
  for (int j = 1; j <= std::min(k, n); ++j) {
    for (int s = 0; s <= n; ++s) {
      next[s] = 0;
      for (int t = 1; t <= s; ++t) {
        if (size_good[t]) next[s] += binom[s - 1][t - 1] * q[s - t];
      }
    }
    std::swap(q, next);
    total += falling(k, j) * q[n];
  }
  return total;
}

Graph induced_on(const Graph& g, std::uint64_t mask) {
  std::vector<int> verts;
  for (std::uint64_t f = mask; f; f &= f - 1) verts.push_back(__builtin_ctzll(f));
  return g.induced(verts).unlabeled();
}

bool complete_or_edgeless(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2;
}

// Class-local count from a predicate on induced subgraphs.
BigInt local_count(const Graph& g, int k, const std::function<bool(const Graph&)>& good_graph) {
  require_undirected(g, "coloring count");
  require_colors(k);
  const int n = g.order();
  if (complete_or_edgeless(g)) {
    std::vector<bool> size_good(n + 1, false);
    std::vector<int> prefix;
    for (int t = 0; t <= n; ++t) {
      size_good[t] = good_graph(g.induced(prefix).unlabeled());
      prefix.push_back(t);
    }
    return partition_count_by_size(n, k, size_good);
  }
  require_order(g, 16, "coloring count");
  std::vector<bool> good(std::size_t{1} << n);
  for (std::uint64_t s = 0; s <= full_mask(n); ++s) good[s] = good_graph(induced_on(g, s));
  return partition_count(n, k, good);
}

int max_degree_of(const Graph& h) {
  int best = 0;
  for (int v = 0; v < h.order(); ++v) best = std::max(best, h.degree(v));
  return best;
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g) {
  require_undirected(g, "chromatic polynomial");
  const std::size_t n = g.order();
  if (g.edge_count() == n * (n - 1) / 2) return falling_polynomial(static_cast<int>(n));
  Chromatic c;
  return c.run(adjacency_masks(g), full_mask(g.order()));
}

Polynomial matching_polynomial(const Graph& g) {
  require_undirected(g, "matching polynomial");
  const auto adj = adjacency_masks(g);
  std::unordered_map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::uint64_t)> m = [&](std::uint64_t s) -> Polynomial {
    if (s == 0) return Polynomial(1L);
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    const int v = __builtin_ctzll(s);
    const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    Polynomial result = m(rest);
    Polynomial covered;
    for (std::uint64_t f = adj[v] & rest; f; f &= f - 1) {
      covered += m(rest & ~(std::uint64_t{1} << __builtin_ctzll(f)));
    }
    result += Polynomial::x() * covered;
    memo.emplace(s, result);
    return result;
  };
  return m(full_mask(g.order()));
}

MatchingProfile matching_profile(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("matching profile: vertex out of range");
  std::vector<int> others;
  for (int u = 0; u < g.order(); ++u) {
    if (u != v) others.push_back(u);
  }
  MatchingProfile p;
  p.minus = matching_polynomial(g.induced(others).unlabeled());
  for (int u : g.neighbors(v)) {
    std::vector<int> rest;
    for (int w : others) {
      if (w != u) rest.push_back(w);
    }
    p.plus += matching_polynomial(g.induced(rest).unlabeled());
  }
  p.plus *= Polynomial::x();
  p.total = p.plus + p.minus;
  return p;
}

BigInt class_colorings(const Graph& g, int k, const std::function<bool(std::uint64_t)>& good) {
  require_undirected(g, "coloring count");
  require_colors(k);
  require_order(g, 16, "coloring count");
  const int n = g.order();
  std::vector<bool> table(std::size_t{1} << n);
  for (std::uint64_t s = 0; s <= full_mask(n); ++s) table[s] = good(s);
  return partition_count(n, k, table);
}

BigInt proper_colorings(const Graph& g, int k) {
  return local_count(g, k, [](const Graph& h) { return h.edge_count() == 0; });
}

BigInt mcc_colorings(const Graph& g, int t, int k) {
  if (t < 1) throw InvalidArgument("mcc colorings: t must be positive");
  return local_count(g, k, [t](const Graph& h) {
    for (const auto& c : components(h)) {
      if (static_cast<int>(c.size()) > t) return false;
    }
    return true;
  });
}

BigInt convex_colorings(const Graph& g, int k) {
  return local_count(g, k, [](const Graph& h) { return is_connected(h); });
}

BigInt improper_colorings(const Graph& g, int t, int k) {
  if (t < 0) throw InvalidArgument("improper colorings: t must be non-negative");
  return local_count(g, k, [t](const Graph& h) { return max_degree_of(h) <= t; });
}

std::string to_string(ClassProperty p) {
  switch (p) {
    case ClassProperty::kBipartite:
      return "bipartite";
    case ClassProperty::kForest:
      return "forest";
    case ClassProperty::kTree:
      return "tree";
    case ClassProperty::kPlanar:
      return "planar";
    case ClassProperty::kCubic:
      return "3regular";
  }
  return "?";
}

ClassProperty parse_class_property(const std::string& text) {
  for (auto p : {ClassProperty::kBipartite, ClassProperty::kForest, ClassProperty::kTree,
                 ClassProperty::kPlanar, ClassProperty::kCubic}) {
    if (to_string(p) == text) return p;
  }
  throw InvalidArgument("unknown class property '" + text +
                        "' (expected bipartite, forest, tree, planar or 3regular)");
}

BigInt property_colorings(const Graph& g, ClassProperty p, int k) {
  return local_count(g, k, [p](const Graph& h) {
    if (h.order() == 0) return true;
    switch (p) {
      case ClassProperty::kBipartite:
        return is_bipartite(h);
      case ClassProperty::kForest:
        return is_forest(h);
      case ClassProperty::kTree:
        return is_tree(h);
      case ClassProperty::kPlanar:
        return is_planar(h);
      case ClassProperty::kCubic:
        for (int v = 0; v < h.order(); ++v) {
          if (h.degree(v) != 3) return false;
        }
        return true;
    }
    return false;
  });
}

// --- Backtracking counts ----------------------------------------------------------

BigInt acyclic_colorings(const Graph& g, int k) {
  require_undirected(g, "acyclic colorings");
  require_colors(k);
  require_order(g, 16, "acyclic colorings");
  const int n = g.order();
  std::vector<int> color(n, -1);
  // Whether the two-colored component of v (colors a, b, assigned vertices
  // only) is a tree.
  auto tree_at = [&](int v, int a, int b) {
    std::vector<int> stack = {v};
    std::vector<bool> seen(n, false);
    seen[v] = true;
    long vertices = 0, degree_sum = 0;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ++vertices;
      for (int y : g.neighbors(x)) {
        if (color[y] != a && color[y] != b) continue;
        ++degree_sum;
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return degree_sum / 2 == vertices - 1;
  };
  BigInt count = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v)) ok = ok && color[u] != c;
      if (!ok) continue;
      color[v] = c;
      for (int other = 0; other < k && ok; ++other) {
        if (other != c) ok = tree_at(v, c, other);
      }
      if (ok) assign(v + 1);
      color[v] = -1;
    }
  };
  assign(0);
  return count;
}

BigInt harmonious_colorings(const Graph& g, int k) {
  require_undirected(g, "harmonious colorings");
  require_colors(k);
  require_order(g, 16, "harmonious colorings");
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> pair_used(static_cast<std::size_t>(k) * k, 0);
  BigInt count = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 0; c < k; ++c) {
      std::vector<int> marked;
      bool ok = true;
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) continue;
        if (color[u] == c || pair_used[c * k + color[u]]) {
          ok = false;
          break;
        }
        pair_used[c * k + color[u]] = pair_used[color[u] * k + c] = 1;
        marked.push_back(color[u]);
      }
      if (ok) {
        color[v] = c;
        assign(v + 1);
        color[v] = -1;
      }
      for (int d : marked) pair_used[c * k + d] = pair_used[d * k + c] = 0;
    }
  };
  assign(0);
  return count;
}

namespace {

constexpr double kMaxEdgeColorings = 1e7;

void require_edge_colorings(const Graph& g, int k, const char* what) {
  double total = 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) total *= k;
  if (total > kMaxEdgeColorings) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(k) + "^" +
                        std::to_string(g.edge_count()) + " edge colorings exceed the bound");
  }
}

}  // namespace

BigInt rainbow_colorings(const Graph& g, int k) {
  require_undirected(g, "rainbow colorings");
  require_colors(k);
  require_edge_colorings(g, k, "rainbow colorings");
  if (k > 20) throw BoundExceeded("rainbow colorings: more than 20 colors");
  const int n = g.order();
  if (!is_connected(g)) return 0;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<std::pair<int, int>>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].emplace_back(edges[e].second, e);
    incident[edges[e].second].emplace_back(edges[e].first, e);
  }
  std::vector<int> color(m, 0);
  const std::size_t masks = std::size_t{1} << k;
  std::vector<char> seen(static_cast<std::size_t>(n) * masks);
  auto connected_rainbow = [&]() {
    for (int s = 0; s < n; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<bool> reached(n, false);
      std::vector<std::pair<int, std::uint32_t>> stack = {{s, 0}};
      seen[s * masks] = 1;
      reached[s] = true;
      while (!stack.empty()) {
        const auto [v, used] = stack.back();
        stack.pop_back();
        for (const auto& [u, e] : incident[v]) {
          const std::uint32_t bit = 1u << color[e];
          if (used & bit) continue;
          const std::uint32_t next = used | bit;
          if (seen[u * masks + next]) continue;
          seen[u * masks + next] = 1;
          reached[u] = true;
          stack.emplace_back(u, next);
        }
      }
      for (int v = 0; v < n; ++v) {
        if (!reached[v]) return false;
      }
    }
    return true;
  };
  BigInt count = 0;
  // Odometer over all k^m colorings.
  if (m > 0 && k == 0) return 0;
  while (true) {
    if (connected_rainbow()) ++count;
    int e = 0;
    while (e < m && ++color[e] == k) color[e++] = 0;
    if (e == m) break;
  }
  return count;
}

BigInt nonrepetitive_colorings(const Graph& g, int k) {
  require_undirected(g, "nonrepetitive colorings");
  require_colors(k);
  require_edge_colorings(g, k, "nonrepetitive colorings");
  const int n = g.order();
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 0 && k == 0) return 0;
  std::vector<std::vector<std::pair<int, int>>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[edges[e].first].emplace_back(edges[e].second, e);
    incident[edges[e].second].emplace_back(edges[e].first, e);
  }
  // Every simple path of even length, as edge sequences, grouped by the
  // largest edge index (checked once that edge is colored).
  std::vector<std::vector<std::vector<int>>> by_last(m);
  std::size_t paths = 0;
  std::vector<bool> on_path(n, false);
  std::vector<int> seq;
  std::function<void(int, int)> walk = [&](int s, int v) {
    for (const auto& [u, e] : incident[v]) {
      if (on_path[u]) continue;
      seq.push_back(e);
      if (seq.size() % 2 == 0 && s < u) {
        by_last[*std::max_element(seq.begin(), seq.end())].push_back(seq);
        if (++paths > 2000000) throw BoundExceeded("nonrepetitive colorings: too many paths");
      }
      on_path[u] = true;
      walk(s, u);
      on_path[u] = false;
      seq.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    walk(s, s);
    on_path[s] = false;
  }
  std::vector<int> color(m, -1);
  BigInt count = 0;
  std::function<void(int)> assign = [&](int e) {
    if (e == m) {
      ++count;
      return;
    }
    for (int c = 0; c < k; ++c) {
      color[e] = c;
      bool ok = true;
      for (const auto& p : by_last[e]) {
        const std::size_t half = p.size() / 2;
        bool square = true;
        for (std::size_t i = 0; i < half && square; ++i) square = color[p[i]] == color[p[half + i]];
        if (square) {
          ok = false;
          break;
        }
      }
      if (ok) assign(e + 1);
    }
    color[e] = -1;
  };
  assign(0);
  return count;
}

}  // namespace conmat
