// Copyright 2026 The conmat Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion C1..C12, decided from the
// experiment reports with exact arithmetic. Exit status 0 iff every criterion
// passes.

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "conmat/exactalg/matrix.hpp"
#include "conmat/experiments/experiment.hpp"

namespace {

using conmat::Matrix;
using conmat::Panel;
using conmat::Report;
using conmat::Value;

std::map<std::string, Report>& cache() {
  static std::map<std::string, Report> reports;
  return reports;
}

const Report& report(const std::string& name) {
  auto it = cache().find(name);
  if (it == cache().end()) it = cache().emplace(name, conmat::run_experiment(name)).first;
  return it->second;
}

// Collects the reasons a criterion fails.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool pass() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

const Panel* find_panel(const Report& r, const std::string& label) {
  for (const auto& p : r.panels) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

const Panel& panel(Verdict& v, const std::string& exp, const std::string& label = "") {
  static const Panel empty;
  const Report& r = report(exp);
  if (!r.error.empty()) {
    v.require(false, exp + ": " + r.error);
    return empty;
  }
  const Panel* p = label.empty() ? (r.panels.empty() ? nullptr : &r.panels.front()) : find_panel(r, label);
  v.require(p != nullptr, exp + ": no panel '" + label + "'");
  return p ? *p : empty;
}

std::string profile_text(const std::vector<std::size_t>& r) { return conmat::format_profile(r); }

// r(N) = N for N = from..n.
void require_identity_growth(Verdict& v, const std::string& exp, const Panel& p, std::size_t n,
                             std::size_t from = 1) {
  bool ok = p.profile.ranks.size() >= n;
  for (std::size_t k = from; ok && k <= n; ++k) ok = p.profile.ranks[k - 1] == k;
  v.require(ok, exp + " r(N) = " + profile_text(p.profile.ranks));
}

void require_strictly_increasing(Verdict& v, const std::string& exp, const Panel& p, std::size_t n) {
  bool ok = p.profile.ranks.size() >= n;
  for (std::size_t k = 1; ok && k < n; ++k) ok = p.profile.ranks[k - 1] < p.profile.ranks[k];
  v.require(ok, exp + " r(N) = " + profile_text(p.profile.ranks) + " not strictly increasing");
}

void require_rank_at_least(Verdict& v, const std::string& exp, const Panel& p, std::size_t n) {
  v.require(p.matrix.rows() >= n && p.profile.ranks.size() >= n && p.profile.ranks[n - 1] + 1 >= n,
            exp + " rank " + profile_text(p.profile.ranks) + " below N-1 at N=" + std::to_string(n));
}

void require_checks(Verdict& v, const std::string& exp) {
  const Report& r = report(exp);
  v.require(r.error.empty(), exp + ": " + r.error);
  for (const auto& c : r.checks) {
    v.require(c.pass, exp + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
}

bool entries_match(const Matrix& m, std::size_t n, const std::function<Value(std::size_t, std::size_t)>& f) {
  if (m.rows() < n || m.cols() < n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(m.at(i, j) == f(i, j))) return false;
    }
  }
  return true;
}

// --- Criteria --------------------------------------------------------------------

Verdict c1() {
  Verdict v;
  const Panel& p = panel(v, "matching-ksum1-rank2");
  v.require(p.n >= 6, "family has fewer than 6 graphs");
  bool shape = !p.profile.ranks.empty() && p.profile.ranks[0] == 1;
  for (std::size_t k = 1; k < p.profile.ranks.size(); ++k) shape = shape && p.profile.ranks[k] == 2;
  v.require(shape, "r(N) = " + profile_text(p.profile.ranks));
  return v;
}

Verdict c2() {
  Verdict v;
  require_checks(v, "matching-bilinear");
  const Report& r = report("matching-bilinear");
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const conmat::Check& c) {
    return c.name.rfind("bilinear identity", 0) == 0;
  });
  v.require(it != r.checks.end(), "no bilinear identity check");
  return v;
}

Verdict c3() {
  Verdict v;
  for (const std::string exp : {"forest-phiF", "tree-phiT", "hamiltonian-join", "perfect-matching-join",
                                "wellcovered-join", "regular-union", "asymmetric-union", "words-L1"}) {
    require_identity_growth(v, exp, panel(v, exp), 6);
  }
  return v;
}

Verdict c4() {
  Verdict v;
  require_identity_growth(v, "connected-phiT", panel(v, "connected-phiT"), 6);
  require_identity_growth(v, "spanning-deg3-modjoin", panel(v, "spanning-deg3-modjoin"), 6);
  const Panel& p = panel(v, "planar-phiP");
  require_identity_growth(v, "planar-phiP", p, 6, 2);
  v.require(entries_match(p.matrix, 6, [](std::size_t i, std::size_t j) { return Value(i != j ? 1 : 0); }),
            "planar-phiP entries are not [n1 != n2]");
  return v;
}

Verdict c5() {
  Verdict v;
  const Panel& p = panel(v, "vandermonde-product");
  v.require(entries_match(p.matrix, 6, [](std::size_t i, std::size_t j) {
              return Value(conmat::Polynomial::monomial(conmat::Rational(1), (i + 1) * (j + 1)));
            }),
            "entries differ from X^{ij}");
  v.require(conmat::rank(p.matrix) == 6, "rank " + std::to_string(conmat::rank(p.matrix)));
  return v;
}

Verdict c6() {
  Verdict v;
  const Panel& ell = panel(v, "words-ell");
  v.require(conmat::rank(ell.matrix) == 2, "words-ell rank " + std::to_string(conmat::rank(ell.matrix)));
  const Panel& even = panel(v, "even-limitation");
  v.require(conmat::rank(even.matrix) <= 2, "even-limitation rank " + std::to_string(conmat::rank(even.matrix)));
  for (const std::string inv : {"order", "size", "odd_degree"}) {
    const Panel& p = panel(v, "cfol-params-finite", inv);
    const auto& r = p.profile.ranks;
    bool stable = r.size() >= 4;
    for (std::size_t k = 4; stable && k <= r.size(); ++k) stable = r[k - 1] == r[3];
    v.require(stable, inv + " r(N) = " + profile_text(r));
  }
  return v;
}

Verdict c7() {
  Verdict v;
  const std::vector<std::pair<std::string, std::vector<std::string>>> blocks = {
      {"chromatic-join-threshold", {"k=3"}},
      {"mcc-join-threshold", {"t=1", "t=2"}},
      {"vacyclic-join", {"k=3"}},
      {"convex-union", {"k=3"}},
      {"harmonious-union", {"k=3"}},
      {"nonrep-ksum1", {"k=3"}},
      {"pcoloring-join", {"bipartite", "forest", "tree", "planar"}},
  };
  for (const auto& [exp, labels] : blocks) {
    require_checks(v, exp);
    for (const auto& label : labels) {
      const Panel& p = panel(v, exp, label);
      require_rank_at_least(v, exp + "/" + label, p, p.n);
    }
    for (const auto& t : report(exp).thresholds) {
      if (t.instance.find("3regular") != std::string::npos) continue;  // covered by C8
      v.require(t.agree, exp + ": " + t.instance + " claimed " + t.claimed + ", measured " + t.measured);
    }
  }
  return v;
}

Verdict c8() {
  Verdict v;
  const std::vector<std::pair<std::string, std::string>> panels = {
      {"rainbow-ksum1", "k=4"},
      {"timproper-ksum1", "t=4,k=3"},
      {"pcoloring-join", "3regular (k=6)"},
      {"avgdeg-union", "main"},
  };
  for (const auto& [exp, label] : panels) {
    require_checks(v, exp);
    require_strictly_increasing(v, exp, panel(v, exp, label), 5);
    const auto& rows = report(exp).thresholds;
    v.require(!rows.empty(), exp + ": no claimed-vs-measured table");
    for (const auto& t : rows) {
      v.require(t.agree || std::any_of(report(exp).warnings.begin(), report(exp).warnings.end(),
                                       [&](const std::string& w) { return w.find(t.instance) != std::string::npos; }),
                exp + ": silent threshold disagreement on " + t.instance);
    }
  }
  return v;
}

Verdict c9() {
  Verdict v;
  const Panel& a = panel(v, "means-arith");
  v.require(entries_match(a.matrix, 6, [](std::size_t i, std::size_t j) {
              return Value(conmat::Rational(2, static_cast<long>(i + j + 2)));
            }),
            "means-arith is not the Cauchy matrix 2/(i+j)");
  require_identity_growth(v, "means-arith", a, 6);
  const Panel& h = panel(v, "means-harmonic");
  v.require(entries_match(h.matrix, 5, [](std::size_t i, std::size_t j) {
              const long n = static_cast<long>(i + 1), m = static_cast<long>(j + 1);
              return Value(conmat::Rational(n * m * (n + m), n * n + m * m));
            }),
            "means-harmonic entries differ from nm(n+m)/(n^2+m^2)");
  require_strictly_increasing(v, "means-harmonic", h, 5);
  return v;
}

Verdict c10() {
  Verdict v;
  const Panel& f = panel(v, "spnf-phiF");
  v.require(entries_match(f.matrix, f.n, [](std::size_t i, std::size_t j) {
              return Value(i == j ? static_cast<long>(i + 3) : 1L);
            }),
            "spnf-phiF entries are not n on the diagonal and 1 elsewhere");
  require_rank_at_least(v, "spnf-phiF", f, f.n);

  const Panel& c = panel(v, "cyc-phiF", "cycles");
  const Panel& c1 = panel(v, "cyc-phiF", "cycles+1");
  v.require(entries_match(c.matrix, c.n, [](std::size_t i, std::size_t j) { return Value(i == j ? 1 : 0); }),
            "cyc-phiF entries are not the identity");
  require_rank_at_least(v, "cyc-phiF", c, c.n);
  require_rank_at_least(v, "cyc-phiF shifted", c1, c1.n);

  const Panel& tw = panel(v, "tw-phiP", "value");
  const bool tw_entries =
      entries_match(tw.matrix, tw.n, [](std::size_t i, std::size_t j) { return Value(i == j ? 5 : 4); });
  std::ostringstream tw_seen;
  if (tw.matrix.rows() >= 2) tw_seen << " (diagonal " << tw.matrix.at(0, 0).to_string() << ", off-diagonal " << tw.matrix.at(0, 1).to_string() << ")";
  v.require(tw_entries, "tw-phiP entries are not 5 on the diagonal and 4 elsewhere" + tw_seen.str());
  v.require(conmat::rank(tw.matrix) == 2, "tw-phiP value matrix rank " + std::to_string(conmat::rank(tw.matrix)));
  const Panel& tw4 = panel(v, "tw-phiP", "tw<=4");
  v.require(entries_match(tw4.matrix, tw4.n, [](std::size_t i, std::size_t j) { return Value(i != j ? 1 : 0); }),
            "tw <= 4 is not the complement of the identity");
  v.require(conmat::rank(tw4.matrix) == tw4.n, "tw <= 4 rank " + std::to_string(conmat::rank(tw4.matrix)));

  const Panel& b = panel(v, "blk-phiB");
  v.require(b.n >= 5, "blk-phiB covers fewer than n1, n2 in 2..6");
  for (std::size_t i = 0; i < std::min<std::size_t>(b.n, 5); ++i) {
    for (std::size_t j = 0; j < std::min<std::size_t>(b.n, 5); ++j) {
      const long n1 = static_cast<long>(i + 2), n2 = static_cast<long>(j + 2);
      const long want = n1 < n2 + 1 ? 1 : (n1 == n2 + 1 ? 2 : 3);
      v.require(b.matrix.at(i, j) == Value(want), "blk-phiB (" + std::to_string(n1) + "," + std::to_string(n2) +
                                                      ") = " + b.matrix.at(i, j).to_string() + ", expected " +
                                                      std::to_string(want));
    }
  }
  return v;
}

Verdict c11() {
  Verdict v;
  for (const std::string exp : {"fv-product-differential", "fv-union-differential"}) {
    require_checks(v, exp);
    v.require(report(exp).status == conmat::ReportStatus::kPass, exp + " did not pass");
  }
  return v;
}

Verdict c12() {
  Verdict v;
  require_checks(v, "transduction-fundamental");
  v.require(report("transduction-fundamental").checks.size() >= 2, "no transductions checked");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"C1 matching 1-sum rank profile 1,2,2,...", c1},
      {"C2 matching bilinear identity", c2},
      {"C3 diagonal growth r(N)=N", c3},
      {"C4 triangular and complement patterns", c4},
      {"C5 Vandermonde product matrix", c5},
      {"C6 bounded-rank sanity", c6},
      {"C7 coloring thresholds and anti-triangular blocks", c7},
      {"C8 measured thresholds reported, strict growth", c8},
      {"C9 arithmetic and harmonic means", c9},
      {"C10 parameter witnesses", c10},
      {"C11 FV differential suites", c11},
      {"C12 transduction fundamental property", c12},
  };
  int failed = 0;
  for (const auto& [name, criterion] : criteria) {
    const Verdict v = criterion();
    std::cout << (v.pass() ? "PASS " : "FAIL ") << name;
    if (!v.pass()) {
      std::cout << " -- " << v.detail();
      ++failed;
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
