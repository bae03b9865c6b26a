// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "conmat/exact/polynomial.hpp"
#include "conmat/structures/graph.hpp"

namespace conmat {

// Exact numeric graph parameters. Undirected graphs unless stated otherwise;
// exponential evaluators throw BoundExceeded beyond their documented guard.

// Vertices adjacent to every other vertex.
int apex_count(const Graph& g);
int odd_degree_count(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

// Matrix-tree theorem: any cofactor of the Laplacian (Bareiss determinant).
// 0 for disconnected graphs, 1 for graphs with at most one vertex.
BigInt spanning_tree_count(const Graph& g);
// Maximal spanning forests: the product of the per-component tree counts.
BigInt spanning_forest_count(const Graph& g);
// Simple cycles of length >= 3. Enumerates the cycle space when the cyclomatic
// number is at most 22, otherwise backtracks over paths (n <= 20).
BigInt cycle_count(const Graph& g);

// Blocks of the biconnected decomposition, bridges and isolated vertices
// included.
int block_count(const Graph& g);
// Blocks with at least three vertices (the 2-connected pieces).
int nontrivial_block_count(const Graph& g);
// Number of connected components of maximum size (0 for the empty graph).
int max_component_count(const Graph& g);

// Largest clique (Bron-Kerbosch with pivoting; n <= 64).
int clique_number(const Graph& g);
// Shortest cycle length; 0 for forests.
int girth(const Graph& g);
// Maximum over subgraphs of the minimum degree.
int degeneracy(const Graph& g);
// Edges of a longest simple path (bitmask DP, n <= 18); 0 without edges.
int longest_path(const Graph& g);
// Length of a longest cycle (bitmask DP, n <= 18); 0 for forests.
int circumference(const Graph& g);

// --- Means (exact rationals) -------------------------------------------------

// 2|E| / |V|; requires a vertex.
Rational average_degree(const Graph& g);
// Square of the quadratic mean of the degrees: sum deg^2 / |V|.
Rational quadratic_mean_degree_squared(const Graph& g);
// |V| / sum 1/deg; rejects graphs with isolated vertices.
Rational harmonic_mean_degree(const Graph& g);
// Average over v of |{u : distance(u, v) <= i}|.
Rational average_ball_size(const Graph& g, int i);
// Average over edges uv of the number of other edges sharing an end vertex,
// deg(u) + deg(v) - 2; requires an edge.
Rational average_edge_incidence(const Graph& g);

}  // namespace conmat
