// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/structures/families.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "conmat/common/error.hpp"

namespace conmat {

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  int minimum;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::kDirPath, "DirPath", 1},
    {FamilyKind::kPath, "Path", 1},
    {FamilyKind::kClique, "Clique", 0},
    {FamilyKind::kEdgeless, "Edgeless", 0},
    {FamilyKind::kDirCycle, "DirCycle", 2},
    {FamilyKind::kCycle, "Cycle", 3},
    {FamilyKind::kStar, "Star", 0},
    {FamilyKind::kMatchingGraph, "MatchingGraph", 0},
    {FamilyKind::kAsym, "Asym", 6},
    {FamilyKind::kCompleteBipartite, "CompleteBipartite", 0},
    {FamilyKind::kOneEdge, "OneEdge", 2},
    {FamilyKind::kCliquePlusIsolated, "CliquePlusIsolated", 0},
    {FamilyKind::kCliqueCopies, "CliqueCopies", 0},
};

const KindInfo& info(FamilyKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw InvalidArgument("unknown family kind");
}

Graph clique(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Deterministic search for a connected asymmetric graph: a Hamiltonian path
// 0-1-...-(n-1) plus the lexicographically first set of extra edges (fewest
// edges first) whose automorphism group is trivial.
Graph find_asymmetric(int n) {
  std::vector<std::pair<int, int>> candidates;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 2; v < n; ++v) candidates.emplace_back(u, v);
  }
  const int m = static_cast<int>(candidates.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      Graph g(n);
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      for (int i : pick) g.add_edge(candidates[i].first, candidates[i].second);
      if (automorphism_count(g, n) == 1) return g;
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvalidArgument("no asymmetric graph on " + std::to_string(n) + " vertices");
}

Graph asymmetric(int n) {
  static std::mutex mutex;
  static std::map<int, Graph> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, find_asymmetric(n)).first;
  return it->second;
}

}  // namespace

int family_minimum(FamilyKind kind) { return info(kind).minimum; }

std::string family_name(FamilyKind kind) { return info(kind).name; }

FamilyKind parse_family_kind(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw InvalidArgument("unknown family '" + name + "'");
}

std::string to_string(const FamilyId& id) {
  std::string out = family_name(id.kind) + "(" + std::to_string(id.index);
  if (id.kind == FamilyKind::kCompleteBipartite) out += "," + std::to_string(id.index2);
  return out + ")";
}

FamilyId parse_family_id(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 1 != text.size()) {
    throw ParseError("family id must look like Name(index)", 0);
  }
  FamilyId id;
  id.kind = parse_family_kind(text.substr(0, open));
  std::istringstream args(text.substr(open + 1, close - open - 1));
  char comma = 0;
  if (!(args >> id.index)) throw ParseError("missing family index", open + 1);
  if (id.kind == FamilyKind::kCompleteBipartite) {
    if (!(args >> comma >> id.index2) || comma != ',') {
      throw ParseError("CompleteBipartite needs two indices", open + 1);
    }
  }
  return id;
}

Graph generate(const FamilyId& id) {
  const int n = id.index;
  if (n < family_minimum(id.kind) ||
      (id.kind == FamilyKind::kCompleteBipartite && id.index2 < 0)) {
    throw InvalidArgument("index of " + to_string(id) + " below the minimum " +
                          std::to_string(family_minimum(id.kind)));
  }
  switch (id.kind) {
    case FamilyKind::kDirPath: {
      Graph g(n, true, true);
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      g.set_label("start", 0);
      g.set_label("end", n - 1);
      return g;
    }
    case FamilyKind::kPath: {
      Graph g(n);
      for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      g.set_label("l1", 0);
      return g;
    }
    case FamilyKind::kClique: {
      Graph g = clique(n);
      if (n > 0) g.set_label("l1", 0);
      return g;
    }
    case FamilyKind::kEdgeless:
      return Graph(n);
    case FamilyKind::kDirCycle: {
      Graph g(n, true);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case FamilyKind::kCycle: {
      Graph g(n);
      for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case FamilyKind::kStar: {
      Graph g(n + 1);
      for (int v = 1; v <= n; ++v) g.add_edge(0, v);
      g.set_label("l1", 0);
      return g;
    }
    case FamilyKind::kMatchingGraph: {
      Graph g(2 * n);
      for (int i = 0; i < n; ++i) g.add_edge(2 * i, 2 * i + 1);
      return g;
    }
    case FamilyKind::kAsym:
      return asymmetric(n);
    case FamilyKind::kCompleteBipartite: {
      Graph g(n + id.index2);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < id.index2; ++v) g.add_edge(u, n + v);
      }
      return g;
    }
    case FamilyKind::kOneEdge: {
      Graph g(n);
      g.add_edge(0, 1);
      return g;
    }
    case FamilyKind::kCliquePlusIsolated: {
      Graph k = clique(n);
      Graph g(n + 1);
      for (const auto& [u, v] : k.edges()) g.add_edge(u, v);
      return g;
    }
    case FamilyKind::kCliqueCopies: {
      Graph g(n * n);
      for (int c = 0; c < n; ++c) {
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) g.add_edge(c * n + u, c * n + v);
        }
      }
      return g;
    }
  }
  throw InvalidArgument("unhandled family");
}

}  // namespace conmat
