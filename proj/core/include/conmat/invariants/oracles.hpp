// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "conmat/exact/polynomial.hpp"
#include "conmat/structures/graph.hpp"

namespace conmat::oracle {

// Independent brute-force re-implementations used to confirm the fast
// evaluators and every coloring threshold. Deliberately naive: exhaustive
// enumeration with small hard limits (BoundExceeded beyond them).

// Colorings by enumerating all k^n vertex colorings (k^n <= 2*10^6).
// `good_class` receives the subgraph induced by one color class (possibly
// empty).
BigInt vertex_colorings(const Graph& g, int k, const std::function<bool(const Graph&)>& good_class);
BigInt proper_colorings(const Graph& g, int k);
// Proper colorings in which every two classes induce a forest.
BigInt acyclic_colorings(const Graph& g, int k);
// Proper colorings with each color pair on at most one edge.
BigInt harmonious_colorings(const Graph& g, int k);
// Edge colorings (k^m <= 2*10^6) where every vertex pair is joined by a path
// with distinct colors; paths enumerated as vertex sequences.
BigInt rainbow_colorings(const Graph& g, int k);
// Edge colorings without a path whose color word is a square.
BigInt nonrepetitive_colorings(const Graph& g, int k);

// Sum of X^|M| over all edge subsets that are matchings (|E| <= 24).
Polynomial matching_polynomial(const Graph& g);
// Edge subsets of size n-1 forming a tree (|E| <= 24).
BigInt spanning_trees(const Graph& g);
// Edge subsets forming one cycle (|E| <= 24).
BigInt cycles(const Graph& g);

// Some vertex permutation closes a Hamiltonian cycle (n <= 9).
bool hamiltonian(const Graph& g);
// Some edge subset is a perfect matching (|E| <= 24).
bool perfect_matching(const Graph& g);
// Maximal independent sets by subset enumeration (n <= 16).
bool well_covered(const Graph& g);
// Minimum over elimination orderings (n <= 8).
int treewidth(const Graph& g);
// Subdivision search for K5 / K3,3 on at most six vertices; larger graphs
// throw BoundExceeded.
bool planar_small(const Graph& g);
// Edge subsets of size n-1 forming a tree of maximum degree <= d (|E| <= 24).
bool spanning_tree_max_degree(const Graph& g, int d);
// Smallest vertex set whose removal disconnects or trivializes (n <= 12).
int vertex_connectivity(const Graph& g);
// Chordal and free of asteroidal triples (Lekkerkerker-Boland; n <= 12).
bool interval(const Graph& g);
// gcd of the lengths of all simple directed cycles (n <= 10).
long cycle_length_gcd(const Graph& g);
// Every induced cycle of length >= 4 is absent (n <= 12).
bool chordal(const Graph& g);

}  // namespace conmat::oracle
