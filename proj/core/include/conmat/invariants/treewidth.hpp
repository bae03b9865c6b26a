// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "conmat/structures/graph.hpp"

namespace conmat {

// Exact treewidth. Safe reductions (simplicial and almost-simplicial vertex
// elimination against a degeneracy lower bound) shrink the graph to a kernel,
// which is solved by dynamic programming over vertex subsets. Requires at most
// 64 vertices and a kernel of at most 22 vertices; throws BoundExceeded
// otherwise. The empty graph has treewidth 0 by convention here (-1 in some
// texts).
int treewidth(const Graph& g);

bool treewidth_at_most(const Graph& g, int w);

}  // namespace conmat
