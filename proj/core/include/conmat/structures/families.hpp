// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "conmat/structures/graph.hpp"

namespace conmat {

// Standard graph families. Every generated graph has a deterministic vertex
// numbering. Families that take part in 1-sums carry the label `l1`.
enum class FamilyKind {
  kDirPath,            // n vertices, arcs i->i+1, labels start=0, end=n-1, ordered; n >= 1
  kPath,               // undirected path on n vertices, l1 at vertex 0; n >= 1
  kClique,             // K_n, l1 at vertex 0 when n >= 1; n >= 0
  kEdgeless,           // E_n; n >= 0
  kDirCycle,           // directed cycle on n vertices; n >= 2
  kCycle,              // undirected cycle; n >= 3
  kStar,               // S_n: centre 0 (label l1) plus n leaves; n >= 0
  kMatchingGraph,      // nK_2; n >= 0
  kAsym,               // connected asymmetric graph on n vertices; n >= 6
  kCompleteBipartite,  // K_{i,j}: parts 0..i-1 and i..i+j-1; i, j >= 0
  kOneEdge,            // K_2 plus n-2 isolated vertices; n >= 2
  kCliquePlusIsolated, // K_n plus one isolated vertex; n >= 0
  kCliqueCopies,       // nK_n (n disjoint copies of K_n); n >= 0
};

struct FamilyId {
  FamilyKind kind = FamilyKind::kEdgeless;
  int index = 0;
  int index2 = 0;  // second part size for kCompleteBipartite

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Smallest valid index of a family.
int family_minimum(FamilyKind kind);
std::string family_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name);

// e.g. "Clique(3)", "CompleteBipartite(2,3)".
std::string to_string(const FamilyId& id);
FamilyId parse_family_id(const std::string& text);

// Canonical instance. Throws InvalidArgument below the documented minimum.
Graph generate(const FamilyId& id);

}  // namespace conmat
