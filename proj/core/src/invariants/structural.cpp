// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/structural.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>

#include "conmat/common/error.hpp"

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

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Whether the subgraph induced on `s` is connected (empty counts as connected).
bool induced_connected(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  if (s == 0) return true;
  std::uint64_t seen = s & -s;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[__builtin_ctzll(f)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

// Whether the subgraph induced on `s` is a single cycle.
bool induced_cycle(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  for (std::uint64_t f = s; f; f &= f - 1) {
    if (popcount(adj[__builtin_ctzll(f)] & s) != 2) return false;
  }
  return induced_connected(adj, s);
}

}  // namespace

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  require_order(g, 64, "bit-mask adjacency");
  std::vector<std::uint64_t> adj(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

// --- Connectivity -----------------------------------------------------------

std::vector<int> component_ids(const Graph& g) {
  const int n = g.order();
  std::vector<int> id(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (id[s] != -1) continue;
    std::vector<int> stack = {s};
    id[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto* list : {&g.neighbors(v), &g.in_neighbors(v)}) {
        for (int u : *list) {
          if (id[u] == -1) {
            id[u] = next;
            stack.push_back(u);
          }
        }
      }
    }
    ++next;
  }
  return id;
}

int component_count(const Graph& g) {
  const auto id = component_ids(g);
  return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<std::vector<int>> components(const Graph& g) {
  const auto id = component_ids(g);
  std::vector<std::vector<int>> out(component_count(g));
  for (int v = 0; v < g.order(); ++v) out[id[v]].push_back(v);
  return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
  require_undirected(g, "block decomposition");
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<bool> articulation(n, false);
  int time = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = time++;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] == -1) {
        ++children;
        edge_stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != -1) articulation[u] = true;
          std::set<int> block;
          while (true) {
            const auto e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == std::make_pair(u, v)) break;
          }
          out.blocks.emplace_back(block.begin(), block.end());
        }
        if (low[v] > disc[u]) out.bridges.emplace_back(std::min(u, v), std::max(u, v));
      } else if (disc[v] < disc[u]) {
        edge_stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent == -1 && children >= 2) articulation[u] = true;
  };

  for (int v = 0; v < n; ++v) {
    if (disc[v] != -1) continue;
    if (g.degree(v) == 0) {
      disc[v] = time++;
      out.blocks.push_back({v});
      continue;
    }
    dfs(v, -1);
  }
  for (int v = 0; v < n; ++v) {
    if (articulation[v]) out.articulation_points.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

bool is_forest(const Graph& g) {
  require_undirected(g, "forest");
  return g.edge_count() + component_count(g) == static_cast<std::size_t>(g.order());
}

bool is_tree(const Graph& g) { return g.order() >= 1 && is_forest(g) && is_connected(g); }

bool is_bipartite(const Graph& g) {
  require_undirected(g, "bipartite");
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (side[u] == -1) {
          side[u] = 1 - side[v];
          q.push(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_odd_cycle(const Graph& g) { return !is_bipartite(g); }

bool has_even_cycle(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() < 3) continue;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) edges += g.has_edge(block[i], block[j]);
    }
    // A 2-connected block with more edges than vertices contains a theta
    // subgraph, two of whose three cycles share a parity class: even.
    if (edges > block.size() || block.size() % 2 == 0) return true;
  }
  return false;
}

bool is_bridgeless(const Graph& g) { return block_decomposition(g).bridges.empty(); }

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).articulation_points.empty();
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`
// (s, t non-adjacent). Unit vertex capacities via vertex splitting.
int local_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  // Node 2v = v_in, 2v+1 = v_out. Residual capacities in a sparse map.
  std::vector<std::unordered_map<int, int>> cap(2 * n);
  auto add = [&](int a, int b, int c) {
    cap[a][b] += c;
    cap[b][a] += 0;
  };
  const int inf = n + 1;
  for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) add(2 * v + 1, 2 * u, inf);
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (flow < limit) {
    std::vector<int> prev(2 * n, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] == -1) {
      const int a = q.front();
      q.pop();
      for (const auto& [b, c] : cap[a]) {
        if (c > 0 && prev[b] == -1) {
          prev[b] = a;
          q.push(b);
        }
      }
    }
    if (prev[sink] == -1) break;
    for (int b = sink; b != source; b = prev[b]) {
      cap[prev[b]][b] -= 1;
      cap[b][prev[b]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  require_undirected(g, "vertex connectivity");
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  // Even's scheme: some vertex among the first best+1 avoids a minimum
  // separator, and is separated by it from some non-neighbour.
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i || g.has_edge(i, j)) continue;
      best = std::min(best, local_connectivity(g, i, j, best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw InvalidArgument("k-connectivity: k must be non-negative");
  return g.order() > k && vertex_connectivity(g) >= k;
}

// --- Recognition --------------------------------------------------------------

namespace {

// Maximum cardinality search order (first visited first).
std::vector<int> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0), order;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[v] && (pick == -1 || weight[v] > weight[pick])) pick = v;
    }
    done[pick] = true;
    order.push_back(pick);
    for (int u : g.neighbors(pick)) {
      if (!done[u]) ++weight[u];
    }
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  require_undirected(g, "chordal");
  const int n = g.order();
  const auto order = mcs_order(g);
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  // The reverse MCS order is a perfect elimination order iff g is chordal:
  // the earlier neighbours of v must all be adjacent to the latest of them.
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int u : g.neighbors(v)) {
      if (position[u] < position[v] && (parent == -1 || position[u] > position[parent])) parent = u;
    }
    if (parent == -1) continue;
    for (int u : g.neighbors(v)) {
      if (u != parent && position[u] < position[v] && !g.has_edge(u, parent)) return false;
    }
  }
  return true;
}

bool is_block_graph(const Graph& g) {
  for (const auto& block : block_decomposition(g).blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (!g.has_edge(block[i], block[j])) return false;
      }
    }
  }
  return true;
}

bool is_perfect(const Graph& g) {
  require_undirected(g, "perfect");
  require_order(g, 14, "perfect");
  const auto adj = adjacency_masks(g);
  const auto co = adjacency_masks(g.complement());
  const std::uint64_t all = (std::uint64_t{1} << g.order()) - 1;
  for (std::uint64_t s = 1; s <= all && all != 0; ++s) {
    const int size = popcount(s);
    if (size < 5 || size % 2 == 0) continue;
    if (induced_cycle(adj, s) || induced_cycle(co, s)) return false;
  }
  return true;
}

bool is_parity_graph(const Graph& g) {
  require_undirected(g, "parity graph");
  require_order(g, 12, "parity graph");
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  std::vector<int> seen(n * n, 0);
  std::vector<int> path;
  bool ok = true;
  // Extends an induced path ending at `last` covering `used`.
  std::function<void(int, std::uint64_t, std::uint64_t)> extend = [&](int last, std::uint64_t used,
                                                                      std::uint64_t blocked) {
    for (std::uint64_t cand = adj[last] & ~used & ~blocked; cand && ok; cand &= cand - 1) {
      const int w = __builtin_ctzll(cand);
      const int s = path.front();
      const int length = static_cast<int>(path.size());  // edges after adding w
      seen[s * n + w] |= 1 << (length % 2);
      if (seen[s * n + w] == 3) {
        ok = false;
        return;
      }
      path.push_back(w);
      extend(w, used | (std::uint64_t{1} << w), blocked | adj[last]);
      path.pop_back();
    }
  };
  for (int s = 0; s < n && ok; ++s) {
    path = {s};
    extend(s, std::uint64_t{1} << s, 0);
  }
  return ok;
}

bool is_interval(const Graph& g) {
  require_undirected(g, "interval");
  require_order(g, 10, "interval");
  if (!is_chordal(g)) return false;
  const int n = g.order();
  // Maximal cliques of a chordal graph: v plus its later neighbours in a
  // perfect elimination order, kept when not contained in another.
  auto order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::uint64_t> candidates;
  for (int v = 0; v < n; ++v) {
    std::uint64_t c = std::uint64_t{1} << v;
    for (int u : g.neighbors(v)) {
      if (position[u] > position[v]) c |= std::uint64_t{1} << u;
    }
    candidates.push_back(c);
  }
  std::vector<std::uint64_t> cliques;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j) continue;
      const bool subset = (candidates[i] & ~candidates[j]) == 0;
      if (subset && (candidates[i] != candidates[j] || j < i)) maximal = false;
    }
    if (maximal) cliques.push_back(candidates[i]);
  }
  // Backtracking over clique orders: a vertex that has appeared and then been
  // left behind may not reappear.
  const int k = static_cast<int>(cliques.size());
  std::vector<bool> used(k, false);
  std::function<bool(int, std::uint64_t, std::uint64_t)> place = [&](int count, std::uint64_t current,
                                                                   std::uint64_t closed) {
    if (count == k) return true;
    for (int c = 0; c < k; ++c) {
      if (used[c] || (cliques[c] & closed)) continue;
      used[c] = true;
      const bool ok = place(count + 1, cliques[c], closed | (current & ~cliques[c]));
      used[c] = false;
      if (ok) return true;
    }
    return false;
  };
  return place(0, 0, 0);
}

// --- Search problems ------------------------------------------------------------

bool is_hamiltonian(const Graph& g) {
  require_undirected(g, "hamiltonian");
  require_order(g, 18, "hamiltonian");
  const int n = g.order();
  if (n < 3) return false;
  const auto adj = adjacency_masks(g);
  // reach[mask]: end vertices of paths from vertex 0 covering exactly mask.
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
      const int v = __builtin_ctz(ends);
      for (std::uint64_t next = adj[v] & ~std::uint64_t{mask}; next; next &= next - 1) {
        const int w = __builtin_ctzll(next);
        reach[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (reach[(1u << n) - 1] & static_cast<std::uint32_t>(adj[0])) != 0;
}

bool has_perfect_matching(const Graph& g) {
  require_undirected(g, "perfect matching");
  require_order(g, 24, "perfect matching");
  const int n = g.order();
  if (n % 2 != 0) return false;
  const auto adj = adjacency_masks(g);
  std::unordered_map<std::uint64_t, bool> memo;
  std::function<bool(std::uint64_t)> solve = [&](std::uint64_t rest) {
    if (rest == 0) return true;
    auto it = memo.find(rest);
    if (it != memo.end()) return it->second;
    const int v = __builtin_ctzll(rest);
    bool ok = false;
    for (std::uint64_t cand = adj[v] & rest; cand && !ok; cand &= cand - 1) {
      const int u = __builtin_ctzll(cand);
      ok = solve(rest & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << u));
    }
    memo.emplace(rest, ok);
    return ok;
  };
  return solve(n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1));
}

bool is_well_covered(const Graph& g) {
  require_undirected(g, "well-covered");
  require_order(g, 40, "well-covered");
  const int n = g.order();
  if (n == 0) return true;
  const auto adj = adjacency_masks(g);
  int size = -1;
  bool ok = true;
  // Bron-Kerbosch with pivoting over the complement: maximal independent sets.
  std::function<void(std::uint64_t, std::uint64_t, int)> bk = [&](std::uint64_t p, std::uint64_t x,
                                                                  int depth) {
        if (!ok) return;
        if (p == 0 && x == 0) {
          if (size == -1) size = depth;
          if (size != depth) ok = false;
          return;
        }
        const std::uint64_t px = p | x;
        const int pivot = __builtin_ctzll(px);
        // Non-neighbours in the complement sense: vertices adjacent to pivot
        // are exactly the ones that may be skipped.
        for (std::uint64_t cand = p & (adj[pivot] | (std::uint64_t{1} << pivot)); cand;
             cand &= cand - 1) {
          const int v = __builtin_ctzll(cand);
          const std::uint64_t bit = std::uint64_t{1} << v;
          const std::uint64_t keep = ~adj[v] & ~bit;
          bk(p & keep, x & keep, depth + 1);
          p &= ~bit;
          x |= bit;
        }
      };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bk(all, 0, 0);
  return ok;
}

namespace {

struct SpanningSearch {
  const Graph& g;
  int d;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> state;  // 0 undecided, 1 in the tree, 2 excluded

  int find(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  bool search() {
    const int n = g.order();
    std::vector<int> parent(n), degree(n, 0);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (state[e] != 1) continue;
      ++degree[edges[e].first];
      ++degree[edges[e].second];
      parent[find(parent, edges[e].first)] = find(parent, edges[e].second);
    }
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = find(parent, v);
    int r = 0;
    for (int v = 0; v < n; ++v) r += comp[v] == v;
    if (r <= 1) return true;

    // Usable edges join different components at vertices with spare degree.
    std::vector<int> usable;
    std::vector<int> usable_at(n, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (state[e] != 0) continue;
      const auto [u, v] = edges[e];
      if (comp[u] == comp[v] || degree[u] >= d || degree[v] >= d) continue;
      usable.push_back(static_cast<int>(e));
      ++usable_at[u];
      ++usable_at[v];
    }
    // Residual capacity of each component in the contracted tree.
    std::vector<long> res(n, 0);
    for (int v = 0; v < n; ++v) res[comp[v]] += std::min(d - degree[v], usable_at[v]);
    long total = 0;
    for (int v = 0; v < n; ++v) {
      if (comp[v] != v) continue;
      if (res[v] < 1) return false;
      total += res[v];
    }
    if (total < 2L * (r - 1)) return false;

    // Connectivity of the components through usable edges; components of
    // capacity one must be leaves, so when r >= 3 the others ("big") must be
    // connected among themselves and every leaf must touch a big component.
    std::vector<int> cparent(n);
    std::iota(cparent.begin(), cparent.end(), 0);
    std::vector<int> big_parent(n);
    std::iota(big_parent.begin(), big_parent.end(), 0);
    std::vector<bool> touches_big(n, false);
    for (int e : usable) {
      const int a = comp[edges[e].first], b = comp[edges[e].second];
      cparent[find(cparent, a)] = find(cparent, b);
      if (res[a] >= 2 && res[b] >= 2) big_parent[find(big_parent, a)] = find(big_parent, b);
      if (res[b] >= 2) touches_big[a] = true;
      if (res[a] >= 2) touches_big[b] = true;
    }
    int groups = 0, big_groups = 0, bigs = 0;
    for (int v = 0; v < n; ++v) {
      if (comp[v] != v) continue;
      groups += find(cparent, v) == v;
      if (res[v] >= 2) {
        ++bigs;
        big_groups += find(big_parent, v) == v;
      }
    }
    if (groups != 1) return false;
    if (r >= 3) {
      if (bigs == 0 || big_groups != 1) return false;
      for (int v = 0; v < n; ++v) {
        if (comp[v] == v && res[v] < 2 && !touches_big[v]) return false;
      }
    }

    // Branch at the component with the fewest usable edges.
    std::vector<int> options(n, 0);
    for (int e : usable) {
      ++options[comp[edges[e].first]];
      ++options[comp[edges[e].second]];
    }
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (comp[v] == v && (pick == -1 || options[v] < options[pick])) pick = v;
    }
    int branch = -1;
    for (int e : usable) {
      if (comp[edges[e].first] == pick || comp[edges[e].second] == pick) {
        branch = e;
        break;
      }
    }
    state[branch] = 1;
    if (search()) return true;
    state[branch] = 2;
    const bool ok = search();
    state[branch] = 0;
    return ok;
  }
};

}  // namespace

bool has_spanning_tree_max_degree(const Graph& g, int d) {
  require_undirected(g, "spanning tree degree");
  require_order(g, 40, "spanning tree degree");
  if (d < 1) throw InvalidArgument("spanning tree degree: d must be positive");
  if (!is_connected(g)) return false;
  if (g.order() <= 1) return true;
  SpanningSearch s{g, d, g.edges(), {}};
  s.state.assign(s.edges.size(), 0);
  return s.search();
}

// --- Degrees ----------------------------------------------------------------------

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool is_bidegree(const Graph& g) {
  std::set<int> degrees;
  for (int v = 0; v < g.order(); ++v) degrees.insert(g.degree(v));
  return degrees.size() <= 2;
}

bool average_degree_at_most_half_order(const Graph& g) {
  require_undirected(g, "average degree");
  const long n = g.order();
  return 4 * static_cast<long>(g.edge_count()) <= n * n;
}

// --- Digraphs -------------------------------------------------------------------

long cycle_length_gcd(const Graph& g) {
  if (!g.directed()) throw InvalidArgument("cycle-length gcd: directed graph expected");
  const int n = g.order();
  // Tarjan's strongly connected components.
  std::vector<int> index(n, -1), low(n, 0), scc(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0, sccs = 0;
  std::function<void(int)> strong = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : g.neighbors(v)) {
      if (index[w] == -1) {
        strong(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        scc[w] = sccs;
        if (w == v) break;
      }
      ++sccs;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (index[v] == -1) strong(v);
  }
  // The period of a strongly connected digraph is the gcd of
  // level(u) + 1 - level(v) over its arcs u->v, for BFS levels from any root.
  std::vector<long> level(n, -1);
  long result = 0;
  for (int root = 0; root < n; ++root) {
    if (level[root] != -1) continue;
    level[root] = 0;
    std::queue<int> q;
    q.push(root);
    std::vector<int> members;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      members.push_back(v);
      for (int w : g.neighbors(v)) {
        if (scc[w] == scc[v] && level[w] == -1) {
          level[w] = level[v] + 1;
          q.push(w);
        }
      }
    }
    for (int u : members) {
      for (int w : g.neighbors(u)) {
        if (scc[w] == scc[u]) result = std::gcd(result, std::labs(level[u] + 1 - level[w]));
      }
    }
  }
  return result;
}

bool is_aperiodic(const Graph& g) { return cycle_length_gcd(g) == 1; }

bool is_asymmetric(const Graph& g, int bound) { return automorphism_count(g, bound) == 1; }

}  // namespace conmat
