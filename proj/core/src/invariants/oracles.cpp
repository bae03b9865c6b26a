// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "conmat/common/error.hpp"

namespace conmat::oracle {

namespace {

constexpr double kMaxAssignments = 2e6;

void require_assignments(int k, std::size_t slots, const char* what) {
  double total = 1;
  for (std::size_t i = 0; i < slots; ++i) total *= k;
  if (total > kMaxAssignments) {
    throw BoundExceeded(std::string(what) + ": " + std::to_string(k) + "^" + std::to_string(slots) +
                        " assignments exceed the oracle bound");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw BoundExceeded(std::string(what) + ": instance exceeds the oracle bound");
}

// Calls visit() for every assignment of values 0..k-1 to `slots` positions.
template <class Visit>
void odometer(std::size_t slots, int k, std::vector<int>& digits, Visit visit) {
  digits.assign(slots, 0);
  if (k == 0 && slots > 0) return;
  while (true) {
    visit();
    std::size_t i = 0;
    while (i < slots && ++digits[i] == k) digits[i++] = 0;
    if (i == slots) return;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Vertices of `keep` (flags) form a forest in g.
bool forest_on(const Graph& g, const std::vector<bool>& keep) {
  UnionFind uf(g.order());
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v] && !uf.unite(u, v)) return false;
  }
  return true;
}

bool connected_on(const Graph& g, const std::vector<bool>& keep) {
  int start = -1, total = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      ++total;
      if (start == -1) start = v;
    }
  }
  if (total <= 1) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack = {start};
  seen[start] = true;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int u : g.neighbors(v)) {
      if (keep[u] && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return count == total;
}

// All simple paths with at least one edge, as (vertex sequence, edge-index
// sequence), each undirected path once.
struct Paths {
  std::vector<std::vector<int>> vertices;
  std::vector<std::vector<int>> edges;
};

Paths all_paths(const Graph& g) {
  const auto edge_list = g.edges();
  auto edge_index = [&](int a, int b) {
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    return static_cast<int>(std::lower_bound(edge_list.begin(), edge_list.end(), key) - edge_list.begin());
  };
  Paths out;
  std::vector<int> path;
  std::vector<bool> on(g.order(), false);
  std::function<void(int)> grow = [&](int v) {
    for (int u : g.neighbors(v)) {
      if (on[u]) continue;
      path.push_back(u);
      on[u] = true;
      if (path.front() < u) {
        out.vertices.push_back(path);
        std::vector<int> es;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) es.push_back(edge_index(path[i], path[i + 1]));
        out.edges.push_back(std::move(es));
      }
      grow(u);
      on[u] = false;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path = {s};
    on[s] = true;
    grow(s);
    on[s] = false;
  }
  return out;
}

bool induced_cycle_subset(const Graph& g, std::uint32_t s) {
  std::vector<bool> keep(g.order(), false);
  int size = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (s >> v & 1) {
      keep[v] = true;
      ++size;
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    int d = 0;
    for (int u : g.neighbors(v)) d += keep[u];
    if (d != 2) return false;
  }
  return size >= 3 && connected_on(g, keep);
}

}  // namespace

BigInt vertex_colorings(const Graph& g, int k, const std::function<bool(const Graph&)>& good_class) {
  require_assignments(k, g.order(), "coloring oracle");
  BigInt count = 0;
  std::vector<int> color;
  odometer(g.order(), k, color, [&] {
    for (int c = 0; c < k; ++c) {
      std::vector<int> cls;
      for (int v = 0; v < g.order(); ++v) {
        if (color[v] == c) cls.push_back(v);
      }
      if (!good_class(g.induced(cls).unlabeled())) return;
    }
    ++count;
  });
  return count;
}

BigInt proper_colorings(const Graph& g, int k) {
  return vertex_colorings(g, k, [](const Graph& h) { return h.edge_count() == 0; });
}

BigInt acyclic_colorings(const Graph& g, int k) {
  require_assignments(k, g.order(), "acyclic coloring oracle");
  BigInt count = 0;
  std::vector<int> color;
  odometer(g.order(), k, color, [&] {
    for (const auto& [u, v] : g.edges()) {
      if (color[u] == color[v]) return;
    }
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        std::vector<bool> keep(g.order());
        for (int v = 0; v < g.order(); ++v) keep[v] = color[v] == a || color[v] == b;
        if (!forest_on(g, keep)) return;
      }
    }
    ++count;
  });
  return count;
}

BigInt harmonious_colorings(const Graph& g, int k) {
  require_assignments(k, g.order(), "harmonious coloring oracle");
  BigInt count = 0;
  std::vector<int> color;
  odometer(g.order(), k, color, [&] {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [u, v] : g.edges()) {
      if (color[u] == color[v]) return;
      pairs.emplace_back(std::min(color[u], color[v]), std::max(color[u], color[v]));
    }
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return;
    ++count;
  });
  return count;
}

BigInt rainbow_colorings(const Graph& g, int k) {
  require_assignments(k, g.edge_count(), "rainbow coloring oracle");
  const int n = g.order();
  const Paths paths = all_paths(g);
  BigInt count = 0;
  std::vector<int> color;
  odometer(g.edge_count(), k, color, [&] {
    std::vector<bool> joined(n * n, false);
    for (std::size_t p = 0; p < paths.edges.size(); ++p) {
      std::vector<int> cs;
      for (int e : paths.edges[p]) cs.push_back(color[e]);
      std::sort(cs.begin(), cs.end());
      if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) continue;
      joined[paths.vertices[p].front() * n + paths.vertices[p].back()] = true;
    }
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!joined[a * n + b]) return;
      }
    }
    ++count;
  });
  return count;
}

BigInt nonrepetitive_colorings(const Graph& g, int k) {
  require_assignments(k, g.edge_count(), "nonrepetitive coloring oracle");
  const Paths paths = all_paths(g);
  BigInt count = 0;
  std::vector<int> color;
  odometer(g.edge_count(), k, color, [&] {
    for (const auto& es : paths.edges) {
      if (es.size() % 2 != 0) continue;
      const std::size_t h = es.size() / 2;
      bool square = true;
      for (std::size_t i = 0; i < h && square; ++i) square = color[es[i]] == color[es[h + i]];
      if (square) return;
    }
    ++count;
  });
  return count;
}

Polynomial matching_polynomial(const Graph& g) {
  const auto edges = g.edges();
  require(edges.size() <= 24, "matching oracle");
  std::vector<Rational> coeff(edges.size() + 1, 0);
  for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
    std::vector<bool> used(g.order(), false);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!(s >> e & 1)) continue;
      ok = !used[edges[e].first] && !used[edges[e].second];
      used[edges[e].first] = used[edges[e].second] = true;
    }
    if (ok) coeff[__builtin_popcount(s)] += 1;
  }
  return Polynomial(coeff);
}

BigInt spanning_trees(const Graph& g) {
  const auto edges = g.edges();
  require(edges.size() <= 24, "spanning tree oracle");
  const int n = g.order();
  if (n <= 1) return 1;
  BigInt count = 0;
  for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
    if (__builtin_popcount(s) != n - 1) continue;
    UnionFind uf(n);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (s >> e & 1) ok = uf.unite(edges[e].first, edges[e].second);
    }
    count += ok;
  }
  return count;
}

BigInt cycles(const Graph& g) {
  const auto edges = g.edges();
  require(edges.size() <= 24, "cycle oracle");
  BigInt count = 0;
  for (std::uint32_t s = 1; s < (1u << edges.size()); ++s) {
    std::vector<int> degree(g.order(), 0);
    Graph h(g.order());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(s >> e & 1)) continue;
      ++degree[edges[e].first];
      ++degree[edges[e].second];
      h.add_edge(edges[e].first, edges[e].second);
    }
    std::vector<bool> keep(g.order());
    bool ok = true;
    for (int v = 0; v < g.order(); ++v) {
      keep[v] = degree[v] > 0;
      ok = ok && (degree[v] == 0 || degree[v] == 2);
    }
    if (ok && connected_on(h, keep)) ++count;
  }
  return count;
}

bool hamiltonian(const Graph& g) {
  const int n = g.order();
  require(n <= 9, "hamiltonian oracle");
  if (n < 3) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.has_edge(perm[i], perm[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

bool perfect_matching(const Graph& g) {
  const auto edges = g.edges();
  require(edges.size() <= 24, "perfect matching oracle");
  const int n = g.order();
  if (n % 2) return false;
  for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
    if (__builtin_popcount(s) != n / 2) continue;
    std::vector<bool> used(n, false);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!(s >> e & 1)) continue;
      ok = !used[edges[e].first] && !used[edges[e].second];
      used[edges[e].first] = used[edges[e].second] = true;
    }
    if (ok) return true;
  }
  return false;
}

bool well_covered(const Graph& g) {
  const int n = g.order();
  require(n <= 16, "well-covered oracle");
  int size = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) independent = independent && !((s >> u & 1) && (s >> v & 1));
    if (!independent) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (s >> v & 1) continue;
      bool blocked = false;
      for (int u : g.neighbors(v)) blocked = blocked || (s >> u & 1);
      maximal = blocked;
    }
    if (!maximal) continue;
    const int c = __builtin_popcount(s);
    if (size != -1 && size != c) return false;
    size = c;
  }
  return true;
}

int treewidth(const Graph& g) {
  const int n = g.order();
  require(n <= 8, "treewidth oracle");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = n;
  do {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    std::vector<bool> gone(n, false);
    int width = 0;
    for (int v : perm) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u) {
        if (!gone[u] && adj[v][u]) nb.push_back(u);
      }
      width = std::max(width, static_cast<int>(nb.size()));
      for (int a : nb) {
        for (int b : nb) {
          if (a != b) adj[a][b] = true;
        }
      }
      gone[v] = true;
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

bool planar_small(const Graph& g) {
  const int n = g.order();
  require(n <= 6, "planarity oracle");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  // K5 on five vertices, possibly with one edge subdivided by a sixth.
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) != 5) continue;
    std::vector<int> five;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) five.push_back(v);
    }
    std::vector<std::pair<int, int>> missing;
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        if (!g.has_edge(five[a], five[b])) missing.emplace_back(five[a], five[b]);
      }
    }
    if (missing.empty()) return false;
    if (missing.size() == 1) {
      for (int w = 0; w < n; ++w) {
        if (!(s >> w & 1) && g.has_edge(w, missing[0].first) && g.has_edge(w, missing[0].second)) return false;
      }
    }
  }
  // K3,3 on all six vertices.
  if (n == 6) {
    for (std::uint32_t s = 0; s < 64; ++s) {
      if (__builtin_popcount(s) != 3 || !(s & 1)) continue;
      bool complete = true;
      for (int a = 0; a < 6 && complete; ++a) {
        for (int b = 0; b < 6 && complete; ++b) {
          if ((s >> a & 1) && !(s >> b & 1)) complete = g.has_edge(a, b);
        }
      }
      if (complete) return false;
    }
  }
  return true;
}

bool spanning_tree_max_degree(const Graph& g, int d) {
  const auto edges = g.edges();
  require(edges.size() <= 24, "spanning tree degree oracle");
  const int n = g.order();
  if (n <= 1) return true;
  for (std::uint32_t s = 0; s < (1u << edges.size()); ++s) {
    if (__builtin_popcount(s) != n - 1) continue;
    UnionFind uf(n);
    std::vector<int> degree(n, 0);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if (!(s >> e & 1)) continue;
      ok = uf.unite(edges[e].first, edges[e].second) && ++degree[edges[e].first] <= d &&
           ++degree[edges[e].second] <= d;
    }
    if (ok) return true;
  }
  return false;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  require(n <= 12, "connectivity oracle");
  for (int size = 0; size < n; ++size) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (__builtin_popcount(s) != size) continue;
      std::vector<bool> keep(n);
      for (int v = 0; v < n; ++v) keep[v] = !(s >> v & 1);
      if (n - size <= 1 || !connected_on(g, keep)) return size;
    }
  }
  return std::max(0, n - 1);
}

bool chordal(const Graph& g) {
  const int n = g.order();
  require(n <= 12, "chordal oracle");
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) >= 4 && induced_cycle_subset(g, s)) return false;
  }
  return true;
}

bool interval(const Graph& g) {
  const int n = g.order();
  require(n <= 12, "interval oracle");
  if (!chordal(g)) return false;
  // Whether x and y are joined by a path avoiding the closed neighbourhood of z.
  auto avoid = [&](int x, int y, int z) {
    std::vector<bool> keep(n, true);
    keep[z] = false;
    for (int u : g.neighbors(z)) keep[u] = false;
    if (!keep[x] || !keep[y]) return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack = {x};
    seen[x] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == y) return true;
      for (int u : g.neighbors(v)) {
        if (keep[u] && !seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return false;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c)) continue;
        if (avoid(b, c, a) && avoid(a, c, b) && avoid(a, b, c)) return false;
      }
    }
  }
  return true;
}

long cycle_length_gcd(const Graph& g) {
  const int n = g.order();
  require(n <= 10, "cycle gcd oracle");
  long result = 0;
  std::vector<bool> on(n, false);
  std::function<void(int, int, int)> walk = [&](int s, int v, int length) {
    for (int u : g.neighbors(v)) {
      if (u == s) result = std::gcd(result, static_cast<long>(length));
      if (u <= s || on[u]) continue;
      on[u] = true;
      walk(s, u, length + 1);
      on[u] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = true;
    walk(s, s, 1);
    on[s] = false;
  }
  return result;
}

}  // namespace conmat::oracle
