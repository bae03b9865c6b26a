// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

#include "conmat/structures/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "conmat/common/error.hpp"

namespace conmat {

namespace {

void insert_sorted(std::vector<int>& v, int x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

}  // namespace

Graph::Graph(int n, bool directed, bool ordered)
    : n_(n), directed_(directed), ordered_(ordered) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.resize(n);
  if (directed_) in_.resize(n);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  insert_sorted(out_[u], v);
  if (directed_) {
    insert_sorted(in_[v], u);
  } else {
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    insert_sorted(out_[v], u);
  }
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : out_[u]) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_label(const std::string& name, int v) {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("label '" + name + "' on vertex " + std::to_string(v) + " out of range");
  }
  for (auto& [l, x] : labels_) {
    if (l == name) {
      x = v;
      return;
    }
  }
  labels_.emplace_back(name, v);
}

std::optional<int> Graph::label(std::string_view name) const {
  for (const auto& [l, x] : labels_) {
    if (l == name) return x;
  }
  return std::nullopt;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  Graph g(static_cast<int>(vertices.size()), directed_, ordered_);
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : out_[vertices[i]]) {
      if (pos[w] >= 0 && (directed_ || static_cast<int>(i) < pos[w])) {
        g.add_edge(static_cast<int>(i), pos[w]);
      }
    }
  }
  for (const auto& [l, x] : labels_) {
    if (pos[x] >= 0) g.set_label(l, pos[x]);
  }
  return g;
}

Graph Graph::unlabeled() const {
  Graph g = *this;
  g.labels_.clear();
  return g;
}

Graph Graph::complement() const {
  if (directed_) throw InvalidArgument("complement requires an undirected graph");
  Graph g(n_, false, ordered_);
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (!has_edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.directed_ == b.directed_ && a.ordered_ == b.ordered_ &&
         a.adj_ == b.adj_ && a.labels_ == b.labels_;
}

Vocabulary graph_vocabulary(const Graph& g) {
  std::vector<std::string> constants;
  for (const auto& [l, x] : g.labels()) constants.push_back(l);
  return Vocabulary({{"E", 2}}, constants, g.ordered());
}

Structure to_structure(const Graph& g) {
  std::vector<Tuple> e;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) e.push_back({u, v});
  }
  std::map<std::string, int> constants;
  for (const auto& [l, x] : g.labels()) constants[l] = x;
  return make_structure(graph_vocabulary(g), g.order(), {{"E", e}}, constants);
}

Graph graph_from_structure(const Structure& s, bool directed) {
  const Vocabulary& vocab = s.vocabulary();
  auto e = vocab.relation_index("E");
  if (!e || vocab.relations()[*e].arity != 2) {
    throw InvalidArgument("structure has no binary relation E");
  }
  Graph g(s.size(), directed, vocab.ordered());
  for (const auto& t : s.tuples(*e)) {
    if (t[0] == t[1]) throw InvalidArgument("self-loop in graph structure");
    if (!directed && !s.holds(*e, Tuple{t[1], t[0]})) {
      throw InvalidArgument("symmetry violation: (" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + ") without its reverse");
    }
    g.add_edge(t[0], t[1]);
  }
  for (std::size_t c = 0; c < vocab.constants().size(); ++c) {
    g.set_label(vocab.constants()[c], s.constant(c));
  }
  return g;
}

Structure to_incidence(const Graph& g) {
  if (g.directed()) throw InvalidArgument("incidence structure requires an undirected graph");
  const auto edges = g.edges();
  const int n = g.order();
  const int total = n + static_cast<int>(edges.size());
  std::vector<Tuple> v_sort, e_sort, inc;
  for (int v = 0; v < n; ++v) v_sort.push_back({v});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int element = n + static_cast<int>(i);
    e_sort.push_back({element});
    inc.push_back({edges[i].first, element});
    inc.push_back({edges[i].second, element});
  }
  Vocabulary vocab({{"V", 1}, {"E", 1}, {"R_inc", 2}}, {}, false);
  return make_structure(vocab, total, {{"V", v_sort}, {"E", e_sort}, {"R_inc", inc}});
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw ParseError("empty graph text", 0);
  std::istringstream header(line);
  long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw ParseError("graph header must be 'n m [directed] [ordered]'", line_no);
  }
  bool directed = false, ordered = false;
  std::string flag;
  while (header >> flag) {
    if (flag == "directed") {
      directed = true;
    } else if (flag == "ordered") {
      ordered = true;
    } else {
      throw ParseError("unknown graph flag '" + flag + "'", line_no);
    }
  }
  Graph g(static_cast<int>(n), directed, ordered);
  for (long i = 0; i < m; ++i) {
    if (!next_line(line)) throw ParseError("missing edge line", line_no);
    std::istringstream ls(line);
    long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw ParseError("edge line must be 'u v'", line_no);
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  while (next_line(line)) {
    std::istringstream ls(line);
    std::string keyword, name, extra;
    long v = -1;
    if (!(ls >> keyword >> name >> v) || keyword != "label" || (ls >> extra)) {
      throw ParseError("expected 'label <name> <vertex>'", line_no);
    }
    try {
      g.set_label(name, static_cast<int>(v));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << " " << g.edge_count();
  if (g.directed()) out << " directed";
  if (g.ordered()) out << " ordered";
  out << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  for (const auto& [l, x] : g.labels()) out << "label " << l << " " << x << "\n";
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------
// Automorphisms and isomorphism: individualization / refinement search.

namespace {

struct Colored {
  const Graph* g;
  std::vector<int> color;
};

// Refines both colorings jointly so that colors stay comparable across the
// two sides. Returns false if some color class has different sizes.
bool refine_jointly(Colored& a, Colored& b) {
  const int n = a.g->order();
  std::size_t classes = 0;
  while (true) {
    using Signature = std::vector<int>;
    std::vector<Signature> sig_a(n), sig_b(n);
    auto signature = [](const Colored& c, int v) {
      Signature s{c.color[v]};
      std::vector<int> out_colors, in_colors;
      for (int w : c.g->neighbors(v)) out_colors.push_back(c.color[w]);
      std::sort(out_colors.begin(), out_colors.end());
      s.push_back(-1);
      s.insert(s.end(), out_colors.begin(), out_colors.end());
      if (c.g->directed()) {
        for (int w : c.g->in_neighbors(v)) in_colors.push_back(c.color[w]);
        std::sort(in_colors.begin(), in_colors.end());
        s.push_back(-2);
        s.insert(s.end(), in_colors.begin(), in_colors.end());
      }
      return s;
    };
    for (int v = 0; v < n; ++v) {
      sig_a[v] = signature(a, v);
      sig_b[v] = signature(b, v);
    }
    std::map<Signature, int> ids;
    for (const auto& s : sig_a) ids.emplace(s, 0);
    for (const auto& s : sig_b) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> count_a(next, 0), count_b(next, 0);
    for (int v = 0; v < n; ++v) {
      a.color[v] = ids[sig_a[v]];
      b.color[v] = ids[sig_b[v]];
      ++count_a[a.color[v]];
      ++count_b[b.color[v]];
    }
    if (count_a != count_b) return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& map) {
  for (int u = 0; u < a.order(); ++u) {
    for (int v : a.neighbors(u)) {
      if (!b.has_edge(map[u], map[v])) return false;
    }
  }
  return a.edge_count() == b.edge_count();
}

bool exists_isomorphism(Colored a, Colored b) {
  if (!refine_jointly(a, b)) return false;
  const int n = a.g->order();
  // Smallest non-singleton cell of a.
  std::map<int, std::vector<int>> cells_a, cells_b;
  for (int v = 0; v < n; ++v) {
    cells_a[a.color[v]].push_back(v);
    cells_b[b.color[v]].push_back(v);
  }
  int target = -1;
  std::size_t best = 0;
  for (const auto& [c, members] : cells_a) {
    if (members.size() > 1 && (target < 0 || members.size() < best)) {
      target = c;
      best = members.size();
    }
  }
  if (target < 0) {
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v) map[v] = cells_b[a.color[v]].front();
    return is_isomorphism(*a.g, *b.g, map);
  }
  const int x = cells_a[target].front();
  const int fresh = static_cast<int>(cells_a.size()) + n + 1;
  for (int y : cells_b[target]) {
    Colored a2 = a, b2 = b;
    a2.color[x] = fresh;
    b2.color[y] = fresh;
    if (exists_isomorphism(a2, b2)) return true;
  }
  return false;
}

std::vector<int> initial_colors(const Graph& g, const std::vector<std::string>& names) {
  std::vector<int> color(g.order(), 0);
  for (const auto& [l, x] : g.labels()) {
    const auto it = std::find(names.begin(), names.end(), l);
    // Several labels may share a vertex; combine them into one color.
    color[x] = color[x] * static_cast<int>(names.size() + 1) +
               static_cast<int>(it - names.begin()) + 1;
  }
  return color;
}

BigInt count_automorphisms(const Graph& g, std::vector<int> color) {
  Colored self{&g, color};
  Colored copy{&g, color};
  refine_jointly(self, copy);
  const int n = g.order();
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[self.color[v]].push_back(v);
  int target = -1;
  std::size_t best = 0;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1 && (target < 0 || members.size() < best)) {
      target = c;
      best = members.size();
    }
  }
  if (target < 0) return 1;
  const int v = cells[target].front();
  const int fresh = static_cast<int>(cells.size()) + n + 1;
  // |Aut| = |orbit(v)| * |Stab(v)|.
  long orbit = 0;
  for (int w : cells[target]) {
    Colored a{&g, self.color}, b{&g, self.color};
    a.color[v] = fresh;
    b.color[w] = fresh;
    if (w == v || exists_isomorphism(a, b)) ++orbit;
  }
  std::vector<int> stabilized = self.color;
  stabilized[v] = fresh;
  return BigInt(orbit) * count_automorphisms(g, stabilized);
}

std::vector<std::string> label_names(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& [l, x] : g.labels()) names.push_back(l);
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

BigInt automorphism_count(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw BoundExceeded("automorphism search: " + std::to_string(g.order()) +
                        " vertices exceed the bound " + std::to_string(bound));
  }
  return count_automorphisms(g, initial_colors(g, label_names(g)));
}

bool isomorphic(const Graph& a, const Graph& b, int bound) {
  if (a.order() > bound || b.order() > bound) {
    throw BoundExceeded("isomorphism search exceeds the bound " + std::to_string(bound));
  }
  if (a.order() != b.order() || a.directed() != b.directed() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  const auto names = label_names(a);
  if (names != label_names(b)) return false;
  return exists_isomorphism(Colored{&a, initial_colors(a, names)},
                            Colored{&b, initial_colors(b, names)});
}

}  // namespace conmat
