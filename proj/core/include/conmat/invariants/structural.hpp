// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "conmat/structures/graph.hpp"

namespace conmat {

// Structural graph properties. Unless stated otherwise the functions expect
// an undirected graph and throw InvalidArgument for a directed one. Every
// exponential search has an explicit size guard and throws BoundExceeded
// beyond it.

// Adjacency rows as bit masks; requires at most 64 vertices.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// --- Connectivity -----------------------------------------------------------

// Component index of every vertex (weak components for digraphs), numbered
// in order of the smallest vertex.
std::vector<int> component_ids(const Graph& g);
int component_count(const Graph& g);
// The empty graph counts as connected.
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// Biconnected decomposition. A block is a maximal connected subgraph without
// a cut vertex: a bridge, a 2-connected piece, or an isolated vertex.
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
  std::vector<int> articulation_points;  // sorted
  std::vector<std::pair<int, int>> bridges;  // u < v, sorted
};
BlockDecomposition block_decomposition(const Graph& g);

bool is_forest(const Graph& g);
// Connected forest with at least one vertex.
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_odd_cycle(const Graph& g);
// Some cycle of even length: a 2-connected block is either an odd cycle or
// contains an even cycle.
bool has_even_cycle(const Graph& g);

bool is_bridgeless(const Graph& g);
// Connected, at least 3 vertices, no articulation point.
bool is_biconnected(const Graph& g);
// Minimum number of vertices whose removal disconnects the graph or leaves a
// single vertex (n - 1 for complete graphs). Max-flow on the split graph.
int vertex_connectivity(const Graph& g);
// More than k vertices and no separator of fewer than k vertices.
bool is_k_connected(const Graph& g, int k);

// --- Recognition --------------------------------------------------------------

// Maximum cardinality search followed by a perfect-elimination check.
bool is_chordal(const Graph& g);
// Every block is a clique.
bool is_block_graph(const Graph& g);
// No odd hole and no odd antihole (strong perfect graph theorem); n <= 14.
bool is_perfect(const Graph& g);
// Every two induced paths with common end vertices have equal parity; n <= 12.
bool is_parity_graph(const Graph& g);
// Interval graph: a linear order of the maximal cliques in which the cliques
// containing each vertex are consecutive; n <= 10.
bool is_interval(const Graph& g);

// --- Search problems ------------------------------------------------------------

// Hamiltonian cycle by bitmask dynamic programming; n <= 18. Graphs with fewer
// than three vertices have no Hamiltonian cycle.
bool is_hamiltonian(const Graph& g);
// Perfect matching by memoized search over vertex subsets; n <= 24.
bool has_perfect_matching(const Graph& g);
// Every maximal independent set has the same size (equivalently every minimal
// vertex cover has the same size); n <= 40, output-sensitive.
bool is_well_covered(const Graph& g);
// Some spanning tree has maximum degree at most d; branching search with
// degree and capacity pruning, n <= 40.
bool has_spanning_tree_max_degree(const Graph& g, int d);

// --- Degrees ----------------------------------------------------------------------

bool is_regular(const Graph& g);
// Every vertex has one of at most two degrees.
bool is_bidegree(const Graph& g);
// Average degree at most |V|/2, i.e. 4|E| <= |V|^2.
bool average_degree_at_most_half_order(const Graph& g);

// --- Digraphs -------------------------------------------------------------------

// gcd of the lengths of all directed cycles equals 1 (computed per strongly
// connected component from BFS levels). Acyclic digraphs are not aperiodic.
// Directed graphs only.
bool is_aperiodic(const Graph& g);
// gcd of all directed cycle lengths; 0 when there is no cycle.
long cycle_length_gcd(const Graph& g);

// --- Symmetry ---------------------------------------------------------------------

// Trivial automorphism group; `bound` is the automorphism-search size guard.
bool is_asymmetric(const Graph& g, int bound = 24);

}  // namespace conmat
