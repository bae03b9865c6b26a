// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "conmat/structures/graph.hpp"

namespace conmat {

// Planarity test: the edge bound |E| <= 3|V| - 6 as a quick reject, then the
// Demoucron-Malgrange-Pertuiset incremental face embedding on every block.
// Undirected graphs only; polynomial, no size guard.
bool is_planar(const Graph& g);

}  // namespace conmat
