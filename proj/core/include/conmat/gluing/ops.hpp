// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conmat/structures/graph.hpp"
#include "conmat/structures/structure.hpp"

namespace conmat {

// --- Structure-level operations -------------------------------------------

// Universe of A followed by B shifted by |A|; relations unioned. The
// vocabulary must agree and carry no constants. An ordered vocabulary yields
// the order with all A-elements before all B-elements.
Structure disjoint_union(const Structure& a, const Structure& b);

// Disjoint union plus unary relations PA and PB marking the two blocks.
Structure rich_disjoint_union(const Structure& a, const Structure& b);

// Ordered (categorical) product: universe A x B numbered row-major
// ((a,b) -> a*|B|+b), each relation holds iff it holds componentwise,
// lexicographic order, constants paired.
Structure ordered_product(const Structure& a, const Structure& b);

// --- Graph-level operations -----------------------------------------------

// Unlabeled disjoint union; vertices of h are shifted by |V(g)|.
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union with pairs of labelled vertices identified, parallel edges
// collapsed. Each pair names a label of g and a label of h. A label used on
// both sides under the same name survives on the merged vertex; other labels
// consumed by the identification disappear; remaining labels are kept (g's
// first). Throws InvalidArgument on missing labels.
Graph k_sum(const Graph& g, const Graph& h,
            const std::vector<std::pair<std::string, std::string>>& pairs);

// k-sum on the standard labels: l1..lk when both graphs carry them; for k=1
// on start/end-labelled graphs, end of g is glued to start of h; for k=2 on
// start/end graphs, start to start and end to end.
Graph k_sum(const Graph& g, const Graph& h, int k);

// Disjoint union plus all edges between the two sides. Undirected only;
// labels are dropped.
Graph join(const Graph& g, const Graph& h);

// Modified join: G joined with H, plus two further copies H1, H2 of H and the
// edges u-u1, u-u2 for every vertex u of H. Vertex numbering: G, H, H1, H2.
Graph mod_join(const Graph& g, const Graph& h);

// Categorical product of graphs (row-major numbering, lexicographic order
// when both are ordered, start/end labels paired when both carry them).
Graph graph_product(const Graph& g, const Graph& h);

// Adds d-3 pendant vertices to every vertex. Requires d >= 3.
Graph attach_pendants(const Graph& g, int d);

// --- The path-product constructions ---------------------------------------

enum class PhiKind { kF, kT, kP, kB };

std::string to_string(PhiKind kind);
PhiKind parse_phi_kind(const std::string& text);

// Direct construction on two start/end-labelled digraphs. Product vertices
// come first (row-major); for kP three further vertices complete K5 minus
// the edge between the product's start and end.
Graph phi_build(PhiKind kind, const Graph& g1, const Graph& g2);
// phi_build on DirPath(n1), DirPath(n2); requires n1, n2 >= 2.
Graph phi_build(PhiKind kind, int n1, int n2);

// --- Operation identifiers -------------------------------------------------

// Stable identifiers used by experiment configs: "disjoint_union",
// "rich_disjoint_union", "ksum:<k>", "join", "mod_join", "product",
// "phi:F|T|P|B", and "phi:B+K:<l>" (phi:B joined with the clique K_l).
struct GluingOp {
  enum class Kind { kDisjointUnion, kRichDisjointUnion, kKSum, kJoin, kModJoin, kProduct, kPhi };
  Kind kind = Kind::kDisjointUnion;
  int k = 0;              // kKSum: number of labels; kPhi: joined clique size
  PhiKind phi = PhiKind::kF;

  std::string id() const;
};

GluingOp parse_gluing_op(const std::string& id);

// Applies the operation to two graphs. For kRichDisjointUnion the graph
// result forgets the block marks (use rich_disjoint_union on structures).
Graph apply(const GluingOp& op, const Graph& g, const Graph& h);

}  // namespace conmat
