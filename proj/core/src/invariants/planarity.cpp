// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/planarity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

#include "conmat/common/error.hpp"
#include "conmat/invariants/structural.hpp"

namespace conmat {

namespace {

// Incremental face embedding of a 2-connected graph with at least three
// vertices (local numbering 0..k-1).
class FaceEmbedder {
 public:
  explicit FaceEmbedder(const Graph& h)
      : h_(h), n_(h.order()), vertex_in_(n_, false), edge_in_(n_ * n_, false) {}

  bool run() {
    embed_initial_cycle();
    const std::size_t m = h_.edge_count();
    while (embedded_edges_ < m) {
      const auto fragments = find_fragments();
      // Pick a fragment with a unique admissible face, else any fragment.
      int chosen = -1, face = -1;
      for (std::size_t f = 0; f < fragments.size(); ++f) {
        const auto faces = admissible_faces(fragments[f].attachments);
        if (faces.empty()) return false;
        if (faces.size() == 1 || chosen == -1) {
          chosen = static_cast<int>(f);
          face = faces.front();
          if (faces.size() == 1) break;
        }
      }
      embed_path(face, fragment_path(fragments[chosen]));
    }
    return true;
  }

 private:
  struct Fragment {
    std::vector<int> attachments;  // embedded vertices touched
    std::vector<int> interior;     // non-embedded vertices (empty for a chord)
  };

  bool edge_in(int u, int v) const { return edge_in_[u * n_ + v]; }
  void mark_edge(int u, int v) {
    if (!edge_in_[u * n_ + v]) ++embedded_edges_;
    edge_in_[u * n_ + v] = edge_in_[v * n_ + u] = true;
  }

  void embed_initial_cycle() {
    // DFS until the first back edge closes a cycle.
    std::vector<int> parent(n_, -2), depth(n_, 0);
    std::vector<int> cycle;
    std::function<bool(int)> dfs = [&](int u) {
      for (int v : h_.neighbors(u)) {
        if (v == parent[u]) continue;
        if (parent[v] == -2) {
          parent[v] = u;
          depth[v] = depth[u] + 1;
          if (dfs(v)) return true;
        } else if (depth[v] < depth[u]) {
          for (int w = u; w != v; w = parent[w]) cycle.push_back(w);
          cycle.push_back(v);
          return true;
        }
      }
      return false;
    };
    parent[0] = -1;
    dfs(0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      vertex_in_[cycle[i]] = true;
      mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    faces_ = {cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
  }

  std::vector<Fragment> find_fragments() const {
    std::vector<Fragment> out;
    for (int u = 0; u < n_; ++u) {
      if (!vertex_in_[u]) continue;
      for (int v : h_.neighbors(u)) {
        if (u < v && vertex_in_[v] && !edge_in(u, v)) out.push_back({{u, v}, {}});
      }
    }
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
      if (vertex_in_[s] || seen[s]) continue;
      Fragment f;
      std::vector<bool> attached(n_, false);
      std::vector<int> stack = {s};
      seen[s] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        f.interior.push_back(v);
        for (int u : h_.neighbors(v)) {
          if (vertex_in_[u]) {
            if (!attached[u]) {
              attached[u] = true;
              f.attachments.push_back(u);
            }
          } else if (!seen[u]) {
            seen[u] = true;
            stack.push_back(u);
          }
        }
      }
      std::sort(f.attachments.begin(), f.attachments.end());
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<int> admissible_faces(const std::vector<int>& attachments) const {
    std::vector<int> out;
    std::vector<bool> on_face(n_);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      std::fill(on_face.begin(), on_face.end(), false);
      for (int v : faces_[f]) on_face[v] = true;
      bool ok = true;
      for (int a : attachments) ok = ok && on_face[a];
      if (ok) out.push_back(static_cast<int>(f));
    }
    return out;
  }

  // A path through the fragment between two distinct attachment vertices.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.interior.empty()) return f.attachments;
    const int a = f.attachments.front();
    std::vector<bool> inside(n_, false);
    for (int v : f.interior) inside[v] = true;
    std::vector<int> prev(n_, -1);
    std::queue<int> q;
    for (int v : h_.neighbors(a)) {
      if (inside[v]) {
        prev[v] = a;
        q.push(v);
      }
    }
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : h_.neighbors(v)) {
        if (u != a && vertex_in_[u]) {
          std::vector<int> path = {u};
          for (int w = v; w != a; w = prev[w]) path.push_back(w);
          path.push_back(a);
          std::reverse(path.begin(), path.end());
          return path;
        }
      }
      for (int u : h_.neighbors(v)) {
        if (inside[u] && prev[u] == -1) {
          prev[u] = v;
          q.push(u);
        }
      }
    }
    throw Error("planarity: fragment with a single attachment in a 2-connected graph");
  }

  void embed_path(int face, const std::vector<int>& path) {
    const std::vector<int> f = faces_[face];
    const int a = path.front(), b = path.back();
    const std::size_t len = f.size();
    const std::size_t i = std::find(f.begin(), f.end(), a) - f.begin();
    const std::size_t j = std::find(f.begin(), f.end(), b) - f.begin();
    std::vector<int> first, second;
    for (std::size_t k = i; k != j; k = (k + 1) % len) first.push_back(f[k]);
    first.push_back(b);
    for (std::size_t k = path.size() - 2; k >= 1; --k) first.push_back(path[k]);
    for (std::size_t k = j; k != i; k = (k + 1) % len) second.push_back(f[k]);
    second.push_back(a);
    for (std::size_t k = 1; k + 1 < path.size(); ++k) second.push_back(path[k]);
    faces_[face] = std::move(first);
    faces_.push_back(std::move(second));
    for (std::size_t k = 0; k < path.size(); ++k) {
      vertex_in_[path[k]] = true;
      if (k + 1 < path.size()) mark_edge(path[k], path[k + 1]);
    }
  }

  const Graph& h_;
  int n_;
  std::vector<bool> vertex_in_;
  std::vector<bool> edge_in_;
  std::size_t embedded_edges_ = 0;
  std::vector<std::vector<int>> faces_;
};

}  // namespace

bool is_planar(const Graph& g) {
  if (g.directed()) throw InvalidArgument("planarity: undirected graph expected");
  const long n = g.order();
  if (n <= 4) return true;
  if (static_cast<long>(g.edge_count()) > 3 * n - 6) return false;
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() <= 4) continue;
    const Graph h = g.induced(block).unlabeled();
    if (static_cast<long>(h.edge_count()) > 3 * static_cast<long>(h.order()) - 6) return false;
    if (!FaceEmbedder(h).run()) return false;
  }
  return true;
}

}  // namespace conmat
