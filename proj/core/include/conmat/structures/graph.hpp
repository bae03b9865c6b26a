// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conmat/exact/polynomial.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// Simple graph on vertices 0..n-1 (undirected, or directed without loops),
// optionally carrying named vertex labels (constants) and an `ordered` flag
// meaning the identity order on vertices is part of the structure.
class Graph {
 public:
  explicit Graph(int n = 0, bool directed = false, bool ordered = false);

  int order() const { return n_; }
  bool directed() const { return directed_; }
  bool ordered() const { return ordered_; }
  void set_ordered(bool ordered) { ordered_ = ordered; }

  // Adds u-v (or the arc u->v). Idempotent; rejects loops and bad vertices.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  // Out-neighbours (all neighbours when undirected), sorted.
  const std::vector<int>& neighbors(int v) const { return out_[v]; }
  // In-neighbours, sorted (equal to neighbors() when undirected).
  const std::vector<int>& in_neighbors(int v) const { return directed_ ? in_[v] : out_[v]; }
  int degree(int v) const { return static_cast<int>(out_[v].size()); }
  std::size_t edge_count() const { return edge_count_; }
  // Undirected: pairs u<v; directed: all arcs. Lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  void set_label(const std::string& name, int v);
  std::optional<int> label(std::string_view name) const;
  const std::vector<std::pair<std::string, int>>& labels() const { return labels_; }
  void clear_labels() { labels_.clear(); }

  // Subgraph induced on `vertices` (renumbered in the given order); labels on
  // kept vertices survive.
  Graph induced(const std::vector<int>& vertices) const;
  // Same graph without labels.
  Graph unlabeled() const;
  // Complement (undirected only), labels dropped.
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  bool directed_ = false;
  bool ordered_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::pair<std::string, int>> labels_;
};

// The graph vocabulary {E/2} plus the graph's labels as constants.
Vocabulary graph_vocabulary(const Graph& g);
// Graph as a relational structure; undirected edges become symmetric pairs.
Structure to_structure(const Graph& g);
// Inverse of to_structure. The vocabulary must contain a binary E; `directed`
// selects whether E must be symmetric. Constants become labels.
Graph graph_from_structure(const Structure& s, bool directed);

// Incidence structure over {V/1, E/1, R_inc/2}: vertices first, then one element
// per edge, incidence pairs (vertex, edge-element). Undirected graphs only.
Structure to_incidence(const Graph& g);

// Text format: `n m [directed] [ordered]`, then m lines `u v`, then optional
// `label <name> <vertex>` lines. Writer output is canonical and round-trips.
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

// Exact number of automorphisms (label-preserving). Throws BoundExceeded when
// the order exceeds `bound`.
BigInt automorphism_count(const Graph& g, int bound = 12);
// Whether some label-preserving isomorphism maps a onto b.
bool isomorphic(const Graph& a, const Graph& b, int bound = 12);

}  // namespace conmat
