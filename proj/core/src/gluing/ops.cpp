// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/gluing/ops.hpp"

#include <algorithm>
#include <map>

#include "conmat/common/error.hpp"
#include "conmat/structures/families.hpp"

namespace conmat {

namespace {

void require_same_vocabulary(const Structure& a, const Structure& b, const char* op) {
  if (!(a.vocabulary() == b.vocabulary())) {
    throw InvalidArgument(std::string(op) + ": vocabulary mismatch " + a.vocabulary().to_string() +
                          " vs " + b.vocabulary().to_string());
  }
}

std::map<std::string, std::vector<Tuple>> union_tuples(const Structure& a, const Structure& b) {
  std::map<std::string, std::vector<Tuple>> rels;
  const auto& symbols = a.vocabulary().relations();
  for (std::size_t r = 0; r < symbols.size(); ++r) {
    auto& out = rels[symbols[r].name];
    out = a.tuples(r);
    for (Tuple t : b.tuples(r)) {
      for (int& e : t) e += a.size();
      out.push_back(std::move(t));
    }
  }
  return rels;
}

}  // namespace

Structure disjoint_union(const Structure& a, const Structure& b) {
  require_same_vocabulary(a, b, "disjoint_union");
  if (!a.vocabulary().constants().empty()) {
    throw InvalidArgument("disjoint_union: constants must be resolved by the caller");
  }
  return make_structure(a.vocabulary(), a.size() + b.size(), union_tuples(a, b));
}

Structure rich_disjoint_union(const Structure& a, const Structure& b) {
  require_same_vocabulary(a, b, "rich_disjoint_union");
  if (!a.vocabulary().constants().empty()) {
    throw InvalidArgument("rich_disjoint_union: constants must be resolved by the caller");
  }
  auto rels = union_tuples(a, b);
  std::vector<Tuple> pa, pb;
  for (int i = 0; i < a.size(); ++i) pa.push_back({i});
  for (int i = 0; i < b.size(); ++i) pb.push_back({a.size() + i});
  rels["PA"] = pa;
  rels["PB"] = pb;
  const Vocabulary vocab = a.vocabulary().with_relations({{"PA", 1}, {"PB", 1}});
  return make_structure(vocab, a.size() + b.size(), rels);
}

Structure ordered_product(const Structure& a, const Structure& b) {
  require_same_vocabulary(a, b, "ordered_product");
  if (!a.vocabulary().ordered()) throw InvalidArgument("ordered_product: unordered operand");
  const int nb = b.size();
  std::map<std::string, std::vector<Tuple>> rels;
  const auto& symbols = a.vocabulary().relations();
  for (std::size_t r = 0; r < symbols.size(); ++r) {
    auto& out = rels[symbols[r].name];
    for (const auto& ta : a.tuples(r)) {
      for (const auto& tb : b.tuples(r)) {
        Tuple t(ta.size());
        for (std::size_t k = 0; k < ta.size(); ++k) t[k] = ta[k] * nb + tb[k];
        out.push_back(std::move(t));
      }
    }
  }
  std::map<std::string, int> constants;
  const auto& names = a.vocabulary().constants();
  for (std::size_t c = 0; c < names.size(); ++c) {
    constants[names[c]] = a.constant(c) * nb + b.constant(c);
  }
  return make_structure(a.vocabulary(), a.size() * nb, rels, constants);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.directed() != h.directed()) throw InvalidArgument("disjoint_union: mixed directedness");
  Graph out(g.order() + h.order(), g.directed(), g.ordered() && h.ordered());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

Graph k_sum(const Graph& g, const Graph& h,
            const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (g.directed() != h.directed()) throw InvalidArgument("k_sum: mixed directedness");
  // Map each vertex of h either onto a vertex of g or onto a fresh vertex.
  std::vector<int> image(h.order(), -1);
  std::vector<std::string> consumed_g, consumed_h, kept;
  for (const auto& [lg, lh] : pairs) {
    auto vg = g.label(lg);
    auto vh = h.label(lh);
    if (!vg) throw InvalidArgument("k_sum: first operand lacks label '" + lg + "'");
    if (!vh) throw InvalidArgument("k_sum: second operand lacks label '" + lh + "'");
    if (image[*vh] >= 0 && image[*vh] != *vg) {
      throw InvalidArgument("k_sum: label '" + lh + "' identified twice");
    }
    image[*vh] = *vg;
    if (lg == lh) {
      kept.push_back(lg);
    } else {
      consumed_g.push_back(lg);
      consumed_h.push_back(lh);
    }
  }
  int next = g.order();
  for (int v = 0; v < h.order(); ++v) {
    if (image[v] < 0) image[v] = next++;
  }
  Graph out(next, g.directed(), false);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) {
    if (image[u] != image[v]) out.add_edge(image[u], image[v]);
  }
  auto contains = [](const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  for (const auto& [l, v] : g.labels()) {
    if (!contains(consumed_g, l)) out.set_label(l, v);
  }
  for (const auto& [l, v] : h.labels()) {
    if (contains(consumed_h, l) || contains(kept, l)) continue;
    if (out.label(l)) continue;  // g's label of the same name wins
    out.set_label(l, image[v]);
  }
  return out;
}

Graph k_sum(const Graph& g, const Graph& h, int k) {
  if (k < 1) throw InvalidArgument("k_sum: k must be at least 1");
  std::vector<std::pair<std::string, std::string>> pairs;
  bool standard = true;
  for (int i = 1; i <= k; ++i) {
    const std::string l = "l" + std::to_string(i);
    if (!g.label(l) || !h.label(l)) standard = false;
    pairs.emplace_back(l, l);
  }
  if (standard) return k_sum(g, h, pairs);
  const bool paths = g.label("start") && g.label("end") && h.label("start") && h.label("end");
  if (paths && k == 1) return k_sum(g, h, {{"end", "start"}});
  if (paths && k == 2) return k_sum(g, h, {{"start", "start"}, {"end", "end"}});
  throw InvalidArgument("k_sum: operands lack labels l1..l" + std::to_string(k));
}

Graph join(const Graph& g, const Graph& h) {
  if (g.directed() || h.directed()) throw InvalidArgument("join: directed input");
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph mod_join(const Graph& g, const Graph& h) {
  if (g.directed() || h.directed()) throw InvalidArgument("mod_join: directed input");
  const int ng = g.order(), nh = h.order();
  Graph out(ng + 3 * nh);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int copy = 0; copy < 3; ++copy) {
    const int base = ng + copy * nh;
    for (const auto& [u, v] : h.edges()) out.add_edge(base + u, base + v);
  }
  for (int u = 0; u < ng; ++u) {
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  }
  for (int v = 0; v < nh; ++v) {
    out.add_edge(ng + v, ng + nh + v);
    out.add_edge(ng + v, ng + 2 * nh + v);
  }
  return out;
}

Graph graph_product(const Graph& g, const Graph& h) {
  const bool directed = g.directed() || h.directed();
  if (g.directed() != h.directed()) throw InvalidArgument("graph_product: mixed directedness");
  const int nh = h.order();
  Graph out(g.order() * nh, directed, g.ordered() && h.ordered());
  for (int a = 0; a < g.order(); ++a) {
    for (int a2 : g.neighbors(a)) {
      for (int b = 0; b < nh; ++b) {
        for (int b2 : h.neighbors(b)) {
          const int u = a * nh + b, v = a2 * nh + b2;
          if (u != v) out.add_edge(u, v);
        }
      }
    }
  }
  for (const char* name : {"start", "end"}) {
    auto x = g.label(name);
    auto y = h.label(name);
    if (x && y) out.set_label(name, *x * nh + *y);
  }
  return out;
}

Graph attach_pendants(const Graph& g, int d) {
  if (d < 3) throw InvalidArgument("attach_pendants: d must be at least 3");
  const int n = g.order();
  const int extra = d - 3;
  Graph out(n * (d - 2), g.directed(), false);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < extra; ++j) out.add_edge(v, n + v * extra + j);
  }
  for (const auto& [l, v] : g.labels()) out.set_label(l, v);
  return out;
}

std::string to_string(PhiKind kind) {
  switch (kind) {
    case PhiKind::kF:
      return "F";
    case PhiKind::kT:
      return "T";
    case PhiKind::kP:
      return "P";
    case PhiKind::kB:
      return "B";
  }
  return "?";
}

PhiKind parse_phi_kind(const std::string& text) {
  if (text == "F") return PhiKind::kF;
  if (text == "T") return PhiKind::kT;
  if (text == "P") return PhiKind::kP;
  if (text == "B") return PhiKind::kB;
  throw InvalidArgument("unknown construction '" + text + "' (expected F, T, P or B)");
}

Graph phi_build(PhiKind kind, const Graph& g1, const Graph& g2) {
  auto s1 = g1.label("start"), e1 = g1.label("end");
  auto s2 = g2.label("start"), e2 = g2.label("end");
  if (!s1 || !e1 || !s2 || !e2) throw InvalidArgument("phi_build: operands need start/end labels");
  const int n1 = g1.order(), n2 = g2.order();
  const int product = n1 * n2;
  Graph out(product + (kind == PhiKind::kP ? 3 : 0));
  auto e_1 = [&](int a, int b) { return g1.has_edge(a, b); };
  auto e_2 = [&](int a, int b) { return g2.has_edge(a, b); };
  for (int v = 0; v < product; ++v) {
    const int v1 = v / n2, v2 = v % n2;
    for (int u = 0; u < product; ++u) {
      if (u == v) continue;
      const int u1 = u / n2, u2 = u % n2;
      const bool diagonal = e_1(v1, u1) && e_2(v2, u2);
      bool edge = false;
      switch (kind) {
        case PhiKind::kF:
          edge = diagonal || (v1 == *s1 && v2 == *s2 && u1 == *e1 && u2 == *e2);
          break;
        case PhiKind::kT:
          edge = diagonal || (v1 == u1 && v1 == *s1 && e_2(v2, u2)) ||
                 (v1 == u1 && v1 == *e1 && e_2(v2, u2));
          break;
        case PhiKind::kB:
          edge = (e_1(*s1, v1) && e_1(u1, *e1) && v2 == *s2 && u2 == *e2) || diagonal ||
                 (v1 == u1 && v1 == *s1 && e_2(v2, u2)) ||
                 (v2 == u2 && v2 == *s2 && e_1(v1, u1) && v1 != *s1) ||
                 (v1 == u1 && v1 == *e1 && e_2(v2, u2)) ||
                 (v2 == u2 && v2 == *e2 && e_1(v1, u1) && u1 != *e1);
          break;
        case PhiKind::kP:
          edge = diagonal;
          break;
      }
      if (edge) out.add_edge(v, u);
    }
  }
  if (kind == PhiKind::kP) {
    const int a = *s1 * n2 + *s2, b = *e1 * n2 + *e2;
    for (int x = product; x < product + 3; ++x) {
      out.add_edge(x, a);
      out.add_edge(x, b);
      for (int y = x + 1; y < product + 3; ++y) out.add_edge(x, y);
    }
  }
  return out;
}

Graph phi_build(PhiKind kind, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw InvalidArgument("phi_build: path lengths must be at least 2");
  return phi_build(kind, generate({FamilyKind::kDirPath, n1}), generate({FamilyKind::kDirPath, n2}));
}

std::string GluingOp::id() const {
  switch (kind) {
    case Kind::kDisjointUnion:
      return "disjoint_union";
    case Kind::kRichDisjointUnion:
      return "rich_disjoint_union";
    case Kind::kKSum:
      return "ksum:" + std::to_string(k);
    case Kind::kJoin:
      return "join";
    case Kind::kModJoin:
      return "mod_join";
    case Kind::kProduct:
      return "product";
    case Kind::kPhi:
      return "phi:" + to_string(phi) + (k > 0 ? "+K:" + std::to_string(k) : "");
  }
  return "?";
}

GluingOp parse_gluing_op(const std::string& id) {
  GluingOp op;
  auto number = [&](const std::string& text) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(text, &used);
      if (used != text.size() || value < 1) throw InvalidArgument("");
      return value;
    } catch (const std::exception&) {
      throw InvalidArgument("bad numeric parameter in gluing op '" + id + "'");
    }
  };
  if (id == "disjoint_union" || id == "union") {
    op.kind = GluingOp::Kind::kDisjointUnion;
  } else if (id == "rich_disjoint_union") {
    op.kind = GluingOp::Kind::kRichDisjointUnion;
  } else if (id.rfind("ksum:", 0) == 0) {
    op.kind = GluingOp::Kind::kKSum;
    op.k = number(id.substr(5));
  } else if (id == "join") {
    op.kind = GluingOp::Kind::kJoin;
  } else if (id == "mod_join") {
    op.kind = GluingOp::Kind::kModJoin;
  } else if (id == "product") {
    op.kind = GluingOp::Kind::kProduct;
  } else if (id.rfind("phi:", 0) == 0 && id.size() >= 5) {
    op.kind = GluingOp::Kind::kPhi;
    op.phi = parse_phi_kind(id.substr(4, 1));
    if (id.size() > 5) {
      if (id.compare(5, 3, "+K:") != 0) throw InvalidArgument("unknown gluing op '" + id + "'");
      op.k = number(id.substr(8));
    }
  } else {
    throw InvalidArgument("unknown gluing op '" + id + "'");
  }
  return op;
}

Graph apply(const GluingOp& op, const Graph& g, const Graph& h) {
  switch (op.kind) {
    case GluingOp::Kind::kDisjointUnion:
    case GluingOp::Kind::kRichDisjointUnion:
      return disjoint_union(g, h);
    case GluingOp::Kind::kKSum:
      return k_sum(g, h, op.k);
    case GluingOp::Kind::kJoin:
      return join(g.unlabeled(), h.unlabeled());
    case GluingOp::Kind::kModJoin:
      return mod_join(g, h);
    case GluingOp::Kind::kProduct:
      return graph_product(g, h);
    case GluingOp::Kind::kPhi: {
      Graph out = phi_build(op.phi, g, h);
      if (op.k > 0) out = join(out, generate({FamilyKind::kClique, op.k}).unlabeled());
      return out;
    }
  }
  throw InvalidArgument("unhandled gluing op");
}

}  // namespace conmat
