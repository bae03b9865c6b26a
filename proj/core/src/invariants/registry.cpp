// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/invariants/registry.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "conmat/common/error.hpp"
#include "conmat/invariants/numeric.hpp"
#include "conmat/invariants/planarity.hpp"
#include "conmat/invariants/polynomials.hpp"
#include "conmat/invariants/structural.hpp"
#include "conmat/invariants/treewidth.hpp"

namespace conmat {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::kProperty:
      return "property";
    case InvariantKind::kNumber:
      return "number";
    case InvariantKind::kPolynomial:
      return "polynomial";
  }
  return "?";
}

std::string InvariantId::to_string() const {
  std::string out = negated ? "not:" + name : name;
  for (std::size_t i = 0; i < params.size(); ++i) out += (i == 0 ? "@" : ",") + params[i];
  return out;
}

InvariantId parse_invariant_id(const std::string& text) {
  InvariantId id;
  std::string rest = text;
  if (rest.rfind("not:", 0) == 0) {
    id.negated = true;
    rest = rest.substr(4);
  }
  const auto at = rest.find('@');
  id.name = rest.substr(0, at);
  if (id.name.empty()) throw InvalidArgument("empty invariant id '" + text + "'");
  if (at != std::string::npos) {
    std::string params = rest.substr(at + 1);
    std::size_t start = 0;
    while (true) {
      const auto comma = params.find(',', start);
      const std::string p = params.substr(start, comma - start);
      if (p.empty()) throw InvalidArgument("empty parameter in invariant id '" + text + "'");
      id.params.push_back(p);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return id;
}

namespace {

using Params = std::vector<std::string>;
using Evaluator = std::function<Value(const Graph&, const Params&)>;

struct Entry {
  InvariantInfo info;
  std::size_t min_params;
  std::size_t max_params;
  Evaluator eval;
};

int int_param(const Params& p, std::size_t i, const std::string& name) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(p[i], &used);
    if (used == p[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("invariant '" + name + "': parameter '" + p[i] + "' is not an integer");
}

Value big(const BigInt& z) { return Value(z); }

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> entries = [] {
    std::map<std::string, Entry> t;
    auto prop = [&](const std::string& name, const std::string& desc, std::function<bool(const Graph&)> f) {
      t[name] = {{name, InvariantKind::kProperty, "", desc}, 0, 0,
                 [f](const Graph& g, const Params&) { return Value(f(g)); }};
    };
    auto num = [&](const std::string& name, const std::string& desc, std::function<Value(const Graph&)> f) {
      t[name] = {{name, InvariantKind::kNumber, "", desc}, 0, 0,
                 [f](const Graph& g, const Params&) { return f(g); }};
    };
    auto with = [&](const std::string& name, InvariantKind kind, const std::string& params,
                    const std::string& desc, std::size_t lo, std::size_t hi, Evaluator f) {
      t[name] = {{name, kind, params, desc}, lo, hi, std::move(f)};
    };

    // Properties.
    prop("acyclic", "no cycle (forest)", is_forest);
    prop("forest", "alias of acyclic", is_forest);
    prop("tree", "connected forest", is_tree);
    prop("connected", "one component", is_connected);
    prop("bipartite", "two-colorable", is_bipartite);
    prop("has_odd_cycle", "some cycle of odd length", has_odd_cycle);
    prop("has_even_cycle", "some cycle of even length", has_even_cycle);
    prop("chordal", "every cycle of length >= 4 has a chord", is_chordal);
    prop("block_graph", "every block is a clique", is_block_graph);
    prop("perfect", "no odd hole or odd antihole (n <= 14)", is_perfect);
    prop("parity_graph", "induced paths between two vertices share parity (n <= 12)", is_parity_graph);
    prop("interval", "intersection graph of intervals (n <= 10)", is_interval);
    prop("planar", "embeddable in the plane", is_planar);
    prop("bridgeless", "no bridge", is_bridgeless);
    prop("biconnected", "connected, >= 3 vertices, no cut vertex", is_biconnected);
    prop("2connected", "alias of biconnected", is_biconnected);
    prop("hamiltonian", "Hamiltonian cycle (n <= 18)", is_hamiltonian);
    prop("perfect_matching", "perfect matching (n <= 24)", has_perfect_matching);
    prop("regular", "all degrees equal", is_regular);
    prop("bidegree", "at most two distinct degrees", is_bidegree);
    prop("avgdeg_le_half", "average degree at most |V|/2", average_degree_at_most_half_order);
    prop("aperiodic", "gcd of directed cycle lengths is 1 (digraphs)", is_aperiodic);
    prop("asymmetric", "trivial automorphism group (n <= 24)", [](const Graph& g) { return is_asymmetric(g); });
    prop("well_covered", "all maximal independent sets have equal size (n <= 40)", is_well_covered);
    prop("even_order", "even number of vertices", [](const Graph& g) { return g.order() % 2 == 0; });
    with("kconnected", InvariantKind::kProperty, "l", "more than l vertices and no separator of < l vertices",
         1, 1, [](const Graph& g, const Params& p) { return Value(is_k_connected(g, int_param(p, 0, "kconnected"))); });
    with("spanning_maxdeg_le", InvariantKind::kProperty, "d", "spanning tree of maximum degree <= d (n <= 40)",
         1, 1, [](const Graph& g, const Params& p) {
           return Value(has_spanning_tree_max_degree(g, int_param(p, 0, "spanning_maxdeg_le")));
         });
    with("treewidth_le", InvariantKind::kProperty, "w", "treewidth at most w", 1, 1,
         [](const Graph& g, const Params& p) { return Value(treewidth_at_most(g, int_param(p, 0, "treewidth_le"))); });

    // Numbers.
    num("order", "|V|", [](const Graph& g) { return Value(g.order()); });
    num("size", "|E|", [](const Graph& g) { return Value(static_cast<long>(g.edge_count())); });
    num("apex", "vertices adjacent to all others", [](const Graph& g) { return Value(apex_count(g)); });
    num("odd_degree", "vertices of odd degree", [](const Graph& g) { return Value(odd_degree_count(g)); });
    num("spanning_trees", "spanning trees (matrix-tree theorem)", [](const Graph& g) { return big(spanning_tree_count(g)); });
    num("spanning_forests", "maximal spanning forests", [](const Graph& g) { return big(spanning_forest_count(g)); });
    num("cycles", "simple cycles", [](const Graph& g) { return big(cycle_count(g)); });
    num("components", "connected components", [](const Graph& g) { return Value(component_count(g)); });
    num("blocks", "blocks including bridges and isolated vertices", [](const Graph& g) { return Value(block_count(g)); });
    num("blk", "blocks with at least three vertices", [](const Graph& g) { return Value(nontrivial_block_count(g)); });
    num("treewidth", "exact treewidth", [](const Graph& g) { return Value(treewidth(g)); });
    num("max_cc", "components of maximum size", [](const Graph& g) { return Value(max_component_count(g)); });
    num("max_degree", "maximum degree", [](const Graph& g) { return Value(max_degree(g)); });
    num("min_degree", "minimum degree", [](const Graph& g) { return Value(min_degree(g)); });
    num("clique_number", "largest clique", [](const Graph& g) { return Value(clique_number(g)); });
    num("girth", "shortest cycle, 0 for forests", [](const Graph& g) { return Value(girth(g)); });
    num("degeneracy", "maximum over subgraphs of the minimum degree", [](const Graph& g) { return Value(degeneracy(g)); });
    num("longest_path", "edges of a longest path (n <= 18)", [](const Graph& g) { return Value(longest_path(g)); });
    num("circumference", "longest cycle, 0 for forests (n <= 18)", [](const Graph& g) { return Value(circumference(g)); });
    num("avg_degree", "arithmetic mean of the degrees", [](const Graph& g) { return Value(average_degree(g)); });
    num("qavg_sq", "square of the quadratic mean of the degrees",
        [](const Graph& g) { return Value(quadratic_mean_degree_squared(g)); });
    num("havg", "harmonic mean of the degrees", [](const Graph& g) { return Value(harmonic_mean_degree(g)); });
    num("avg_edge_incidence", "mean number of edges sharing a vertex with an edge",
        [](const Graph& g) { return Value(average_edge_incidence(g)); });
    with("avg_ball", InvariantKind::kNumber, "i", "mean size of the radius-i ball", 1, 1,
         [](const Graph& g, const Params& p) { return Value(average_ball_size(g, int_param(p, 0, "avg_ball"))); });
    with("mcc", InvariantKind::kNumber, "t,k", "k-colorings whose classes have components of <= t vertices", 2, 2,
         [](const Graph& g, const Params& p) {
           return big(mcc_colorings(g, int_param(p, 0, "mcc"), int_param(p, 1, "mcc")));
         });
    with("vacyclic", InvariantKind::kNumber, "k", "proper k-colorings without two-colored cycles", 1, 1,
         [](const Graph& g, const Params& p) { return big(acyclic_colorings(g, int_param(p, 0, "vacyclic"))); });
    with("convex", InvariantKind::kNumber, "k", "k-colorings with connected classes", 1, 1,
         [](const Graph& g, const Params& p) { return big(convex_colorings(g, int_param(p, 0, "convex"))); });
    with("harmonious", InvariantKind::kNumber, "k", "proper k-colorings using each color pair on <= 1 edge", 1, 1,
         [](const Graph& g, const Params& p) { return big(harmonious_colorings(g, int_param(p, 0, "harmonious"))); });
    with("rainbow", InvariantKind::kNumber, "k", "path-rainbow connected edge k-colorings", 1, 1,
         [](const Graph& g, const Params& p) { return big(rainbow_colorings(g, int_param(p, 0, "rainbow"))); });
    with("timproper", InvariantKind::kNumber, "t,k", "k-colorings whose classes have maximum degree <= t", 2, 2,
         [](const Graph& g, const Params& p) {
           return big(improper_colorings(g, int_param(p, 0, "timproper"), int_param(p, 1, "timproper")));
         });
    with("nonrep", InvariantKind::kNumber, "k", "non-repetitive edge k-colorings", 1, 1,
         [](const Graph& g, const Params& p) { return big(nonrepetitive_colorings(g, int_param(p, 0, "nonrep"))); });
    with("p_coloring", InvariantKind::kNumber, "P,k",
         "k-colorings whose classes induce P in {bipartite, forest, tree, planar, 3regular}", 2, 2,
         [](const Graph& g, const Params& p) {
           return big(property_colorings(g, parse_class_property(p[0]), int_param(p, 1, "p_coloring")));
         });
    with("proper", InvariantKind::kNumber, "k", "proper k-colorings (subset dynamic programming)", 1, 1,
         [](const Graph& g, const Params& p) { return big(proper_colorings(g, int_param(p, 0, "proper"))); });

    // Polynomials (an optional point of evaluation as parameter).
    with("chromatic", InvariantKind::kPolynomial, "[k]", "chromatic polynomial, or its value at k", 0, 1,
         [](const Graph& g, const Params& p) {
           const Polynomial c = chromatic_polynomial(g);
           if (p.empty()) return Value(c);
           return Value(c.evaluate(Rational(int_param(p, 0, "chromatic"))).get_num());
         });
    with("matching", InvariantKind::kPolynomial, "[x]", "matching generating polynomial, or its value at x", 0, 1,
         [](const Graph& g, const Params& p) {
           const Polynomial m = matching_polynomial(g);
           if (p.empty()) return Value(m);
           return Value(m.evaluate(Rational(int_param(p, 0, "matching"))).get_num());
         });
    with("x_pow_order", InvariantKind::kPolynomial, "", "the monomial X^|V|", 0, 0,
         [](const Graph& g, const Params&) {
           return Value(Polynomial::monomial(Rational(1), static_cast<std::size_t>(g.order())));
         });
    return t;
  }();
  return entries;
}

const Entry& entry(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw InvalidArgument("unknown invariant '" + name + "'");
  return it->second;
}

}  // namespace

const std::vector<InvariantInfo>& registered_invariants() {
  static const std::vector<InvariantInfo> infos = [] {
    std::vector<InvariantInfo> out;
    for (const auto& [name, e] : table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const InvariantInfo& invariant_info(const std::string& name) { return entry(name).info; }

InvariantKind invariant_kind(const InvariantId& id) { return entry(id.name).info.kind; }

Value evaluate(const InvariantId& id, const Graph& g) {
  const Entry& e = entry(id.name);
  if (id.params.size() < e.min_params || id.params.size() > e.max_params) {
    throw InvalidArgument("invariant '" + id.name + "' expects parameters (" + e.info.params + "), got " +
                          std::to_string(id.params.size()));
  }
  if (id.negated && e.info.kind != InvariantKind::kProperty) {
    throw InvalidArgument("only properties can be negated: '" + id.to_string() + "'");
  }
  Value v = e.eval(g, id.params);
  if (id.negated) v = Value(!v.as_bool());
  return v;
}

Value evaluate(const std::string& id, const Graph& g) { return evaluate(parse_invariant_id(id), g); }

bool eval_bool(const InvariantId& prop, const Graph& g) {
  if (invariant_kind(prop) != InvariantKind::kProperty) {
    throw InvalidArgument("'" + prop.to_string() + "' is not a property");
  }
  return evaluate(prop, g).as_bool();
}

Value eval_number(const InvariantId& num, const Graph& g) {
  if (invariant_kind(num) != InvariantKind::kNumber) {
    throw InvalidArgument("'" + num.to_string() + "' is not a numeric parameter");
  }
  return evaluate(num, g);
}

Value eval_poly(const InvariantId& poly, const Graph& g, std::optional<long> at) {
  if (invariant_kind(poly) != InvariantKind::kPolynomial) {
    throw InvalidArgument("'" + poly.to_string() + "' is not a polynomial");
  }
  const Value v = evaluate(poly, g);
  if (!at || v.kind() != ValueKind::kPolynomial) return v;
  const Rational r = v.as_polynomial().evaluate(Rational(*at));
  if (r.get_den() == 1) return Value(BigInt(r.get_num()));
  return Value(r);
}

}  // namespace conmat
