// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>

#include "conmat/exact/polynomial.hpp"
#include "conmat/structures/graph.hpp"

namespace conmat {

// Graph polynomials and coloring counts. Undirected graphs only. Counts of
// colorings are exact integers for a given number of colors k; color classes
// may be empty.

// Chromatic polynomial in the indeterminate (printed as X) by deletion and
// contraction, shortcut by simplicial vertices, components, cliques and
// edgeless graphs; at most 12 vertices unless a shortcut applies.
Polynomial chromatic_polynomial(const Graph& g);

// Matching generating polynomial m(G, X) = sum over matchings M of X^|M|.
Polynomial matching_polynomial(const Graph& g);

// The split of m(G, X) at a distinguished vertex v: matchings covering v (m+)
// and avoiding v (m-), with m = m+ + m-.
struct MatchingProfile {
  Polynomial plus;
  Polynomial minus;
  Polynomial total;
};
MatchingProfile matching_profile(const Graph& g, int v);

// --- Colorings in which each color class satisfies a local condition ----------
//
// Counted by dynamic programming over vertex subsets (n <= 16); complete and
// edgeless graphs use a closed formula over class sizes.

// Proper colorings: every class independent.
BigInt proper_colorings(const Graph& g, int k);
// Every class induces components of at most t vertices.
BigInt mcc_colorings(const Graph& g, int t, int k);
// Every class induces a connected subgraph.
BigInt convex_colorings(const Graph& g, int k);
// Every class induces a subgraph of maximum degree at most t.
BigInt improper_colorings(const Graph& g, int t, int k);

enum class ClassProperty { kBipartite, kForest, kTree, kPlanar, kCubic };
std::string to_string(ClassProperty p);
ClassProperty parse_class_property(const std::string& text);
// Every class induces a graph with property P. Empty classes satisfy every P
// (including tree and 3-regular) vacuously.
BigInt property_colorings(const Graph& g, ClassProperty p, int k);

// Generic form: `good(mask)` decides a class given as a vertex bit mask.
BigInt class_colorings(const Graph& g, int k, const std::function<bool(std::uint64_t)>& good);

// --- Colorings with conditions across classes (backtracking) -------------------

// Proper colorings in which every two classes induce a forest; n <= 16.
BigInt acyclic_colorings(const Graph& g, int k);
// Proper colorings using every pair of colors on at most one edge; n <= 16.
BigInt harmonious_colorings(const Graph& g, int k);
// Edge colorings in which every two vertices are joined by a path with
// pairwise distinct edge colors; k^|E| <= 10^7.
BigInt rainbow_colorings(const Graph& g, int k);
// Edge colorings in which no path carries a color sequence of the form xx;
// k^|E| <= 10^7.
BigInt nonrepetitive_colorings(const Graph& g, int k);

}  // namespace conmat
